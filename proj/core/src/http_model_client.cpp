#include "deckhand/agent/http_model_client.hpp"

#include <cstdlib>

#include <httplib.h>

namespace deckhand::agent {

HttpModelClient::HttpModelClient(HttpModelConfig config) : config_(std::move(config)) {}

json HttpModelClient::build_request(const HttpModelConfig& config,
                                    const std::vector<ModelMessage>& messages,
                                    const json& tools) {
  json msgs = json::array();
  for (const auto& msg : messages) {
    json m{{"role", to_string(msg.role)}};
    bool has_image = false;
    for (const auto& part : msg.content) {
      if (part.kind == ContentPart::Kind::kImage) has_image = true;
    }
    if (has_image) {
      json parts = json::array();
      for (const auto& part : msg.content) {
        if (part.kind == ContentPart::Kind::kText) {
          parts.push_back(json{{"type", "text"}, {"text", part.text}});
        } else {
          parts.push_back(json{
              {"type", "image_url"},
              {"image_url",
               {{"url", "data:" + part.media_type + ";base64," +
                            base64_encode(part.image_bytes.data(), part.image_bytes.size())}}}});
        }
      }
      m["content"] = parts;
    } else {
      m["content"] = msg.joined_text();
    }
    if (!msg.tool_calls.empty()) {
      json calls = json::array();
      for (const auto& call : msg.tool_calls) {
        calls.push_back(json{{"id", call.id},
                             {"type", "function"},
                             {"function",
                              {{"name", call.name}, {"arguments", call.arguments.dump()}}}});
      }
      m["tool_calls"] = calls;
    }
    if (msg.tool_call_id) m["tool_call_id"] = *msg.tool_call_id;
    msgs.push_back(std::move(m));
  }
  json body{{"model", config.model}, {"messages", msgs}};
  if (tools.is_array() && !tools.empty()) body["tools"] = tools;
  return body;
}

Result<ModelResponse> HttpModelClient::parse_response(const json& body) {
  if (!body.contains("choices") || !body.at("choices").is_array() || body.at("choices").empty())
    return Err("model reply has no choices");
  const json& message = body.at("choices").at(0).value("message", json::object());
  ModelResponse out;
  if (message.contains("content") && message.at("content").is_string())
    out.text = message.at("content").get<std::string>();
  if (message.contains("tool_calls") && message.at("tool_calls").is_array()) {
    for (const auto& c : message.at("tool_calls")) {
      ToolCall call;
      call.id = c.value("id", "");
      const json fn = c.value("function", json::object());
      call.name = fn.value("name", "");
      const std::string raw_args = fn.value("arguments", "{}");
      json args = json::parse(raw_args, nullptr, false);
      call.arguments = args.is_discarded() ? json{{"_raw", raw_args}} : args;
      out.tool_calls.push_back(std::move(call));
    }
  }
  if (body.contains("usage") && body.at("usage").contains("total_tokens"))
    out.usage_total_tokens = body.at("usage").at("total_tokens").get<int>();
  return out;
}

Result<ModelResponse> HttpModelClient::complete(const std::vector<ModelMessage>& messages,
                                                const json& tools) {
  if (config_.base_url.empty()) return Err("model endpoint base_url is not configured");
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.connect_timeout_s);
  client.set_read_timeout(config_.read_timeout_s);

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key == nullptr || *key == '\0')
      return Err("credential environment variable '" + config_.api_key_env + "' is not set");
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  const json request = build_request(config_, messages, tools);
  auto res = client.Post(config_.path, headers, request.dump(), "application/json");
  if (!res) return Err("model transport failure: " + httplib::to_string(res.error()));
  if (res->status != 200)
    return Err("model endpoint returned HTTP " + std::to_string(res->status) + ": " +
               res->body.substr(0, 200));
  json body = json::parse(res->body, nullptr, false);
  if (body.is_discarded()) return Err("model endpoint returned malformed JSON");
  return parse_response(body);
}

}  // namespace deckhand::agent
