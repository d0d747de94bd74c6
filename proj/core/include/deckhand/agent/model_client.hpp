#pragma once

#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "deckhand/agent/message.hpp"
#include "deckhand/result.hpp"

namespace deckhand::agent {

struct ModelResponse {
  std::string text;
  std::vector<ToolCall> tool_calls;
  std::optional<int> usage_total_tokens;
};

/// Chat-completion backend. Implementations must be safe for concurrent use
/// across trajectories.
class ModelClient {
 public:
  virtual ~ModelClient() = default;

  /// `tools` is the registry manifest (may be an empty array for plain chat).
  virtual Result<ModelResponse> complete(const std::vector<ModelMessage>& messages,
                                         const json& tools) = 0;
};

/// Replays a fixed transcript of responses; records every request it sees.
/// The workhorse for deterministic tests of the loop, critic, and judges.
class ScriptedModelClient : public ModelClient {
 public:
  ScriptedModelClient() = default;
  explicit ScriptedModelClient(std::vector<Result<ModelResponse>> transcript);

  void push(ModelResponse response);
  void push_error(std::string message);
  void push_text(std::string text);
  void push_call(std::string name, json arguments, std::optional<int> usage = std::nullopt);

  Result<ModelResponse> complete(const std::vector<ModelMessage>& messages,
                                 const json& tools) override;

  struct RecordedRequest {
    std::vector<ModelMessage> messages;
    json tools;
  };

  const std::vector<RecordedRequest>& requests() const { return requests_; }
  std::size_t remaining() const;

 private:
  mutable std::mutex mu_;
  std::deque<Result<ModelResponse>> transcript_;
  std::vector<RecordedRequest> requests_;
  int next_call_id_ = 0;
};

/// Adapts a lambda; handy for stub backends that compute replies from the
/// conversation.
class CallbackModelClient : public ModelClient {
 public:
  using Fn = std::function<Result<ModelResponse>(const std::vector<ModelMessage>&, const json&)>;
  explicit CallbackModelClient(Fn fn) : fn_(std::move(fn)) {}

  Result<ModelResponse> complete(const std::vector<ModelMessage>& messages,
                                 const json& tools) override {
    return fn_(messages, tools);
  }

 private:
  Fn fn_;
};

}  // namespace deckhand::agent
