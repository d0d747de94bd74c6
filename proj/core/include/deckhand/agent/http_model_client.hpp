#pragma once

#include <string>

#include "deckhand/agent/model_client.hpp"

namespace deckhand::agent {

struct HttpModelConfig {
  std::string base_url;                      // e.g. https://api.example.com/v1
  std::string path = "/chat/completions";
  std::string model;
  std::string api_key_env;                   // env var holding the credential
  int connect_timeout_s = 10;
  int read_timeout_s = 300;
};

/// Chat-completion endpoint speaking the common JSON wire format: a message
/// list with text and image parts plus a tool manifest in, tool calls or text
/// out. Stateless per call, so clients are safe to share across trajectories.
class HttpModelClient : public ModelClient {
 public:
  explicit HttpModelClient(HttpModelConfig config);

  Result<ModelResponse> complete(const std::vector<ModelMessage>& messages,
                                 const json& tools) override;

  /// Wire-format helpers, exposed for tests.
  static json build_request(const HttpModelConfig& config,
                            const std::vector<ModelMessage>& messages, const json& tools);
  static Result<ModelResponse> parse_response(const json& body);

 private:
  HttpModelConfig config_;
};

}  // namespace deckhand::agent
