#include "deckhand/agent/model_client.hpp"

namespace deckhand::agent {

ScriptedModelClient::ScriptedModelClient(std::vector<Result<ModelResponse>> transcript) {
  for (auto& r : transcript) transcript_.push_back(std::move(r));
}

void ScriptedModelClient::push(ModelResponse response) {
  std::lock_guard lock(mu_);
  transcript_.emplace_back(std::move(response));
}

void ScriptedModelClient::push_error(std::string message) {
  std::lock_guard lock(mu_);
  transcript_.emplace_back(Err(std::move(message)));
}

void ScriptedModelClient::push_text(std::string text) {
  ModelResponse r;
  r.text = std::move(text);
  push(std::move(r));
}

void ScriptedModelClient::push_call(std::string name, json arguments, std::optional<int> usage) {
  ModelResponse r;
  ToolCall call;
  {
    std::lock_guard lock(mu_);
    call.id = "call_" + std::to_string(next_call_id_++);
  }
  call.name = std::move(name);
  call.arguments = std::move(arguments);
  r.tool_calls.push_back(std::move(call));
  r.usage_total_tokens = usage;
  push(std::move(r));
}

Result<ModelResponse> ScriptedModelClient::complete(const std::vector<ModelMessage>& messages,
                                                    const json& tools) {
  std::lock_guard lock(mu_);
  requests_.push_back(RecordedRequest{messages, tools});
  if (transcript_.empty()) return Err("scripted transcript exhausted");
  Result<ModelResponse> next = std::move(transcript_.front());
  transcript_.pop_front();
  return next;
}

std::size_t ScriptedModelClient::remaining() const {
  std::lock_guard lock(mu_);
  return transcript_.size();
}

}  // namespace deckhand::agent
