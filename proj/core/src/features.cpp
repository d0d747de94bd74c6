#include "deckhand/eval/features.hpp"

#include <cmath>
#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "deckhand/agent/message.hpp"

namespace deckhand::eval {

using json = nlohmann::json;

Result<std::vector<double>> HistogramFeatureClient::embed(const std::vector<std::uint8_t>& png) {
  auto image = img::decode_png(png);
  if (!image) return image.error();
  const auto& raster = image.value();
  std::vector<double> bins(64, 0.0);
  const std::size_t pixels = static_cast<std::size_t>(raster.width) * raster.height;
  for (std::size_t p = 0; p < pixels; ++p) {
    const int r = raster.rgb[p * 3] >> 6;
    const int g = raster.rgb[p * 3 + 1] >> 6;
    const int b = raster.rgb[p * 3 + 2] >> 6;
    bins[static_cast<std::size_t>((r << 4) | (g << 2) | b)] += 1.0;
  }
  for (auto& v : bins) v /= static_cast<double>(pixels);
  return bins;
}

HttpFeatureClient::HttpFeatureClient(HttpFeatureConfig config) : config_(std::move(config)) {}

Result<std::vector<double>> HttpFeatureClient::embed(const std::vector<std::uint8_t>& png) {
  if (config_.base_url.empty()) return Err("feature endpoint base_url is not configured");
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(120);
  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str()))
      headers.emplace("Authorization", std::string("Bearer ") + key);
  }
  const json body{{"png_base64", agent::base64_encode(png.data(), png.size())}};
  auto res = client.Post(config_.path, headers, body.dump(), "application/json");
  if (!res) return Err("feature transport failure: " + httplib::to_string(res.error()));
  if (res->status != 200) return Err("feature endpoint returned HTTP " + std::to_string(res->status));
  json reply = json::parse(res->body, nullptr, false);
  if (reply.is_discarded() || !reply.contains("vector") || !reply.at("vector").is_array())
    return Err("feature endpoint returned malformed JSON");
  return reply.at("vector").get<std::vector<double>>();
}

Result<FeatureExtraction> extract_features(const std::vector<DeckImages>& decks,
                                           FeatureClient& extractor) {
  FeatureExtraction out;
  std::vector<std::vector<double>> rows;
  int dim = -1;

  for (const auto& deck : decks) {
    if (deck.slide_pngs.empty()) {
      out.excluded.push_back(deck.deck_id + ": deck has no rendered slides");
      continue;
    }
    auto vec = extractor.embed(deck.slide_pngs.front());
    if (!vec) {
      out.excluded.push_back(deck.deck_id + ": " + vec.error().message);
      continue;
    }
    double norm = 0.0;
    for (double v : vec.value()) norm += v * v;
    norm = std::sqrt(norm);
    if (norm <= 0.0) {
      out.excluded.push_back(deck.deck_id + ": zero embedding");
      continue;
    }
    for (auto& v : vec.value()) v /= norm;
    if (dim < 0) dim = static_cast<int>(vec.value().size());
    if (static_cast<int>(vec.value().size()) != dim) {
      out.excluded.push_back(deck.deck_id + ": embedding dimension mismatch");
      continue;
    }
    rows.push_back(vec.take());
    out.deck_ids.push_back(deck.deck_id);
  }

  if (rows.empty()) return Err("no decks could be embedded");
  out.features.rows = static_cast<int>(rows.size());
  out.features.cols = dim;
  out.features.data.reserve(rows.size() * static_cast<std::size_t>(dim));
  for (const auto& row : rows)
    out.features.data.insert(out.features.data.end(), row.begin(), row.end());
  return out;
}

}  // namespace deckhand::eval
