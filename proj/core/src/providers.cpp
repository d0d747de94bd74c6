#include "deckhand/tools/providers.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "deckhand/agent/message.hpp"
#include "deckhand/img/png_codec.hpp"

namespace deckhand::tools {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string to_hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string fixture_key(const json& arguments) { return to_hex16(fnv1a64(arguments.dump())); }

StubProvider::StubProvider(fs::path fixture_dir) : fixture_dir_(std::move(fixture_dir)) {}

std::optional<json> StubProvider::load_fixture(const std::string& tool,
                                               const json& arguments) const {
  if (fixture_dir_.empty()) return std::nullopt;
  const fs::path path = fixture_dir_ / (tool + "__" + fixture_key(arguments) + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

Result<std::vector<SearchResult>> StubProvider::search(const std::string& kind,
                                                       const std::string& query, int count) {
  const json args{{"kind", kind}, {"query", query}};
  if (auto fixture = load_fixture("search_" + kind, args)) {
    std::vector<SearchResult> out;
    for (const auto& r : fixture->at("results")) {
      out.push_back({r.value("title", ""), r.value("url", ""), r.value("snippet", "")});
    }
    return out;
  }
  const std::string key = fixture_key(args);
  std::vector<SearchResult> out;
  const int n = std::min(std::max(count, 1), 10);
  for (int i = 1; i <= n; ++i) {
    SearchResult r;
    r.title = "[" + kind + " " + std::to_string(i) + "] " + query;
    r.url = "https://stub.invalid/" + key + "/" + std::to_string(i);
    r.snippet = "Deterministic stub result " + std::to_string(i) + " for \"" + query + "\".";
    out.push_back(std::move(r));
  }
  return out;
}

Result<FetchedPage> StubProvider::fetch(const std::string& url) {
  const json args{{"url", url}};
  if (auto fixture = load_fixture("fetch_url", args)) {
    return FetchedPage{fixture->value("content_type", "text/html"), fixture->value("body", "")};
  }
  const std::string key = fixture_key(args);
  std::ostringstream body;
  body << "<html><head><title>Stub page " << key.substr(0, 8) << "</title></head><body>"
       << "<h1>Stub page for " << url << "</h1>"
       << "<p>This deterministic placeholder stands in for remote content.</p>"
       << "<p>See also <a href=\"https://stub.invalid/" << key << "\">the source entry</a>.</p>"
       << "</body></html>";
  return FetchedPage{"text/html", body.str()};
}

Result<std::string> StubProvider::paper_authors(const std::string& title) {
  const json args{{"title", title}};
  if (auto fixture = load_fixture("get_paper_authors", args)) return fixture->value("text", "");
  const std::string key = fixture_key(args).substr(0, 6);
  return "Authors of \"" + title + "\": A. Stub, B. Fixture, C. " + key;
}

Result<std::string> StubProvider::scholar_details(const std::string& name) {
  const json args{{"name", name}};
  if (auto fixture = load_fixture("get_scholar_details", args)) return fixture->value("text", "");
  return name + ": stub scholar profile; h-index " +
         std::to_string(10 + static_cast<int>(fnv1a64(name) % 40)) + ".";
}

Result<GeneratedImage> StubProvider::generate_image(const std::string& prompt, int width,
                                                    int height) {
  if (width <= 0) width = 512;
  if (height <= 0) height = 512;
  const json args{{"prompt", prompt}};
  if (auto fixture = load_fixture("image_generation", args)) {
    GeneratedImage img;
    img.width = fixture->value("width", width);
    img.height = fixture->value("height", height);
    img.png_bytes = agent::base64_decode(fixture->value("png_base64", ""));
    return img;
  }
  // Deterministic two-tone swatch keyed by the prompt.
  const std::uint64_t h = fnv1a64(prompt);
  auto base = img::RasterImage::solid(width, height, static_cast<std::uint8_t>(h & 0xff),
                                      static_cast<std::uint8_t>((h >> 8) & 0xff),
                                      static_cast<std::uint8_t>((h >> 16) & 0xff));
  base.fill_rect(width / 8, height / 8, width * 3 / 4, height / 4,
                 static_cast<std::uint8_t>((h >> 24) & 0xff),
                 static_cast<std::uint8_t>((h >> 32) & 0xff),
                 static_cast<std::uint8_t>((h >> 40) & 0xff));
  GeneratedImage img;
  img.width = width;
  img.height = height;
  img.png_bytes = img::encode_png(base);
  return img;
}

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {}

Result<json> HttpProvider::invoke(const std::string& tool, const json& arguments) {
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str()))
      headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const json body{{"tool", tool}, {"arguments", arguments}};
  auto res = client.Post("/invoke", headers, body.dump(), "application/json");
  if (!res) return Err("provider transport failure: " + httplib::to_string(res.error()));
  if (res->status != 200)
    return Err("provider returned HTTP " + std::to_string(res->status));
  json reply = json::parse(res->body, nullptr, false);
  if (reply.is_discarded()) return Err("provider returned malformed JSON");
  return reply;
}

Result<std::vector<SearchResult>> HttpProvider::search(const std::string& kind,
                                                       const std::string& query, int count) {
  auto reply = invoke("search_" + kind, json{{"query", query}, {"count", count}});
  if (!reply) return reply.error();
  std::vector<SearchResult> out;
  for (const auto& r : reply.value().value("results", json::array())) {
    out.push_back({r.value("title", ""), r.value("url", ""), r.value("snippet", "")});
  }
  return out;
}

Result<FetchedPage> HttpProvider::fetch(const std::string& url) {
  auto reply = invoke("fetch_url", json{{"url", url}});
  if (!reply) return reply.error();
  return FetchedPage{reply.value().value("content_type", "text/html"),
                     reply.value().value("body", "")};
}

Result<std::string> HttpProvider::paper_authors(const std::string& title) {
  auto reply = invoke("get_paper_authors", json{{"title", title}});
  if (!reply) return reply.error();
  return reply.value().value("text", "");
}

Result<std::string> HttpProvider::scholar_details(const std::string& name) {
  auto reply = invoke("get_scholar_details", json{{"name", name}});
  if (!reply) return reply.error();
  return reply.value().value("text", "");
}

Result<GeneratedImage> HttpProvider::generate_image(const std::string& prompt, int width,
                                                    int height) {
  auto reply = invoke("image_generation",
                      json{{"prompt", prompt}, {"width", width}, {"height", height}});
  if (!reply) return reply.error();
  GeneratedImage img;
  img.width = reply.value().value("width", width);
  img.height = reply.value().value("height", height);
  img.png_bytes = agent::base64_decode(reply.value().value("png_base64", ""));
  if (img.png_bytes.empty()) return Err("provider returned no image data");
  return img;
}

}  // namespace deckhand::tools
