#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deckhand/result.hpp"

namespace deckhand::tools {

using json = nlohmann::json;

struct SearchResult {
  std::string title;
  std::string url;
  std::string snippet;
};

struct FetchedPage {
  std::string content_type;
  std::string body;
};

struct GeneratedImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> png_bytes;
};

/// Backends for the retrieve/create tool categories. Two implementations
/// ship: a deterministic fixture-keyed stub and a generic HTTP backend.
class Provider {
 public:
  virtual ~Provider() = default;

  virtual Result<std::vector<SearchResult>> search(const std::string& kind,
                                                   const std::string& query, int count) = 0;
  virtual Result<FetchedPage> fetch(const std::string& url) = 0;
  virtual Result<std::string> paper_authors(const std::string& title) = 0;
  virtual Result<std::string> scholar_details(const std::string& name) = 0;
  virtual Result<GeneratedImage> generate_image(const std::string& prompt, int width, int height) = 0;
};

/// Stable 64-bit FNV-1a over the canonical JSON of tool arguments; keys the
/// stub fixture files.
std::string fixture_key(const json& arguments);

/// Deterministic provider. Looks for a canned response under
/// `fixture_dir/<tool>__<key>.json`; when absent, synthesizes a stable
/// placeholder from the argument hash so pipelines keep moving.
class StubProvider : public Provider {
 public:
  explicit StubProvider(std::filesystem::path fixture_dir = {});

  Result<std::vector<SearchResult>> search(const std::string& kind, const std::string& query,
                                           int count) override;
  Result<FetchedPage> fetch(const std::string& url) override;
  Result<std::string> paper_authors(const std::string& title) override;
  Result<std::string> scholar_details(const std::string& name) override;
  Result<GeneratedImage> generate_image(const std::string& prompt, int width, int height) override;

 private:
  std::optional<json> load_fixture(const std::string& tool, const json& arguments) const;
  std::filesystem::path fixture_dir_;
};

struct HttpProviderConfig {
  std::string base_url;      // e.g. https://tools.example.com
  std::string api_key_env;   // environment variable holding the credential
};

/// Generic HTTP backend: POSTs {"tool": ..., "arguments": ...} to
/// `<base_url>/invoke` and expects a JSON reply shaped like the stub fixtures.
class HttpProvider : public Provider {
 public:
  explicit HttpProvider(HttpProviderConfig config);

  Result<std::vector<SearchResult>> search(const std::string& kind, const std::string& query,
                                           int count) override;
  Result<FetchedPage> fetch(const std::string& url) override;
  Result<std::string> paper_authors(const std::string& title) override;
  Result<std::string> scholar_details(const std::string& name) override;
  Result<GeneratedImage> generate_image(const std::string& prompt, int width, int height) override;

 private:
  Result<json> invoke(const std::string& tool, const json& arguments);
  HttpProviderConfig config_;
};

}  // namespace deckhand::tools
