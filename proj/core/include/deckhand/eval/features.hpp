#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deckhand/eval/vendi.hpp"
#include "deckhand/img/png_codec.hpp"
#include "deckhand/result.hpp"

namespace deckhand::eval {

/// Visual embedding backend: PNG bytes in, feature vector out.
class FeatureClient {
 public:
  virtual ~FeatureClient() = default;
  virtual Result<std::vector<double>> embed(const std::vector<std::uint8_t>& png) = 0;
};

/// Deterministic in-process extractor: a 4x4x4 RGB color histogram (64 dims),
/// mass-normalized. Coarse, but separates palettes cleanly.
class HistogramFeatureClient : public FeatureClient {
 public:
  Result<std::vector<double>> embed(const std::vector<std::uint8_t>& png) override;
};

struct HttpFeatureConfig {
  std::string base_url;
  std::string path = "/embed";
  std::string api_key_env;
};

/// Remote embedding endpoint: POST {"png_base64": ...} -> {"vector": [...]}.
class HttpFeatureClient : public FeatureClient {
 public:
  explicit HttpFeatureClient(HttpFeatureConfig config);
  Result<std::vector<double>> embed(const std::vector<std::uint8_t>& png) override;

 private:
  HttpFeatureConfig config_;
};

/// One deck of rendered slides, first slide leading.
struct DeckImages {
  std::string deck_id;
  std::vector<std::vector<std::uint8_t>> slide_pngs;
};

struct FeatureExtraction {
  FeatureMatrix features;                 // one unit row per embedded deck
  std::vector<std::string> deck_ids;      // rows aligned with features
  std::vector<std::string> excluded;      // deck ids that failed, with reasons
};

/// Embeds each deck by its first (title) slide and unit-normalizes the rows.
/// Decks whose extraction fails are excluded and flagged, not fatal.
Result<FeatureExtraction> extract_features(const std::vector<DeckImages>& decks,
                                           FeatureClient& extractor);

}  // namespace deckhand::eval
