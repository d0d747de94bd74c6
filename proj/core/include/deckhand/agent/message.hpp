#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace deckhand::agent {

using json = nlohmann::json;

enum class Role { kSystem, kUser, kAssistant, kTool };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

/// One element of a message body: either text or an encoded raster image.
struct ContentPart {
  enum class Kind { kText, kImage };
  Kind kind = Kind::kText;
  std::string text;
  std::vector<std::uint8_t> image_bytes;
  std::string media_type;  // e.g. "image/png"; set for image parts

  static ContentPart make_text(std::string t);
  static ContentPart make_image(std::vector<std::uint8_t> bytes, std::string media_type);
};

/// A tool invocation requested by the model.
struct ToolCall {
  std::string id;
  std::string name;
  json arguments = json::object();

  bool operator==(const ToolCall& other) const;
};

struct ModelMessage {
  Role role = Role::kUser;
  std::vector<ContentPart> content;
  std::vector<ToolCall> tool_calls;
  std::optional<std::string> tool_call_id;  // set on tool-role messages

  static ModelMessage text(Role role, std::string body);
  static ModelMessage tool_result(std::string call_id, std::vector<ContentPart> parts);

  /// Concatenation of all text parts; images contribute nothing.
  std::string joined_text() const;
};

json to_json(const ContentPart& part);
json to_json(const ToolCall& call);
json to_json(const ModelMessage& msg);
ContentPart content_part_from_json(const json& j);
ToolCall tool_call_from_json(const json& j);
ModelMessage message_from_json(const json& j);

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace deckhand::agent
