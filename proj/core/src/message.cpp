#include "deckhand/agent/message.hpp"

#include <array>
#include <stdexcept>

namespace deckhand::agent {

std::string to_string(Role role) {
  switch (role) {
    case Role::kSystem: return "system";
    case Role::kUser: return "user";
    case Role::kAssistant: return "assistant";
    case Role::kTool: return "tool";
  }
  return "user";
}

Role role_from_string(const std::string& s) {
  if (s == "system") return Role::kSystem;
  if (s == "assistant") return Role::kAssistant;
  if (s == "tool") return Role::kTool;
  return Role::kUser;
}

ContentPart ContentPart::make_text(std::string t) {
  ContentPart p;
  p.kind = Kind::kText;
  p.text = std::move(t);
  return p;
}

ContentPart ContentPart::make_image(std::vector<std::uint8_t> bytes, std::string media_type) {
  if (bytes.empty()) throw std::invalid_argument("image part requires non-empty bytes");
  if (media_type.empty()) throw std::invalid_argument("image part requires a media type");
  ContentPart p;
  p.kind = Kind::kImage;
  p.image_bytes = std::move(bytes);
  p.media_type = std::move(media_type);
  return p;
}

bool ToolCall::operator==(const ToolCall& other) const {
  return id == other.id && name == other.name && arguments == other.arguments;
}

ModelMessage ModelMessage::text(Role role, std::string body) {
  ModelMessage m;
  m.role = role;
  m.content.push_back(ContentPart::make_text(std::move(body)));
  return m;
}

ModelMessage ModelMessage::tool_result(std::string call_id, std::vector<ContentPart> parts) {
  ModelMessage m;
  m.role = Role::kTool;
  m.tool_call_id = std::move(call_id);
  m.content = std::move(parts);
  return m;
}

std::string ModelMessage::joined_text() const {
  std::string out;
  for (const auto& part : content) {
    if (part.kind != ContentPart::Kind::kText) continue;
    if (!out.empty()) out += "\n";
    out += part.text;
  }
  return out;
}

json to_json(const ContentPart& part) {
  if (part.kind == ContentPart::Kind::kText) {
    return json{{"type", "text"}, {"text", part.text}};
  }
  return json{{"type", "image"},
              {"media_type", part.media_type},
              {"data", base64_encode(part.image_bytes.data(), part.image_bytes.size())}};
}

json to_json(const ToolCall& call) {
  return json{{"id", call.id}, {"name", call.name}, {"arguments", call.arguments}};
}

json to_json(const ModelMessage& msg) {
  json parts = json::array();
  for (const auto& p : msg.content) parts.push_back(to_json(p));
  json j{{"role", to_string(msg.role)}, {"content", parts}};
  if (!msg.tool_calls.empty()) {
    json calls = json::array();
    for (const auto& c : msg.tool_calls) calls.push_back(to_json(c));
    j["tool_calls"] = calls;
  }
  if (msg.tool_call_id) j["tool_call_id"] = *msg.tool_call_id;
  return j;
}

ContentPart content_part_from_json(const json& j) {
  const std::string type = j.value("type", "text");
  if (type == "image") {
    return ContentPart::make_image(base64_decode(j.at("data").get<std::string>()),
                                   j.value("media_type", "image/png"));
  }
  return ContentPart::make_text(j.value("text", ""));
}

ToolCall tool_call_from_json(const json& j) {
  ToolCall c;
  c.id = j.value("id", "");
  c.name = j.value("name", "");
  if (j.contains("arguments")) c.arguments = j.at("arguments");
  return c;
}

ModelMessage message_from_json(const json& j) {
  ModelMessage m;
  m.role = role_from_string(j.value("role", "user"));
  if (j.contains("content")) {
    if (j.at("content").is_string()) {
      m.content.push_back(ContentPart::make_text(j.at("content").get<std::string>()));
    } else {
      for (const auto& p : j.at("content")) m.content.push_back(content_part_from_json(p));
    }
  }
  if (j.contains("tool_calls")) {
    for (const auto& c : j.at("tool_calls")) m.tool_calls.push_back(tool_call_from_json(c));
  }
  if (j.contains("tool_call_id")) m.tool_call_id = j.at("tool_call_id").get<std::string>();
  return m;
}

namespace {
constexpr char kB64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int, 256> build_b64_reverse() {
  std::array<int, 256> rev{};
  rev.fill(-1);
  for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(kB64Alphabet[i])] = i;
  return rev;
}
}  // namespace

std::string base64_encode(const std::uint8_t* data, std::size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (std::size_t i = 0; i < len; i += 3) {
    std::uint32_t chunk = static_cast<std::uint32_t>(data[i]) << 16;
    if (i + 1 < len) chunk |= static_cast<std::uint32_t>(data[i + 1]) << 8;
    if (i + 2 < len) chunk |= data[i + 2];
    out += kB64Alphabet[(chunk >> 18) & 0x3f];
    out += kB64Alphabet[(chunk >> 12) & 0x3f];
    out += i + 1 < len ? kB64Alphabet[(chunk >> 6) & 0x3f] : '=';
    out += i + 2 < len ? kB64Alphabet[chunk & 0x3f] : '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  static const std::array<int, 256> rev = build_b64_reverse();
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  std::uint32_t acc = 0;
  int bits = 0;
  for (char ch : text) {
    if (ch == '=' || ch == '\n' || ch == '\r') continue;
    const int v = rev[static_cast<unsigned char>(ch)];
    if (v < 0) continue;
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
    }
  }
  return out;
}

}  // namespace deckhand::agent
