#include "deckhand/synth/critic.hpp"

#include <filesystem>

namespace deckhand::synth {

namespace fs = std::filesystem;
using agent::ContentPart;
using agent::ModelMessage;
using agent::Role;

Result<CritiqueResult> parse_critique(const std::string& reply_text) {
  std::string body = reply_text;
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) {
    // Tolerate fenced or wrapped replies by trying the outermost braces.
    const std::size_t open = body.find('{');
    const std::size_t close = body.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close <= open)
      return Err("critique is not JSON");
    j = json::parse(body.substr(open, close - open + 1), nullptr, false);
    if (j.is_discarded()) return Err("critique is not JSON");
  }
  if (!j.is_object() || !j.contains("severity") || !j.at("severity").is_number_integer())
    return Err("critique lacks an integer severity");
  const int severity = j.at("severity").get<int>();
  if (severity < 0 || severity > 3) return Err("severity out of range 0-3");
  CritiqueResult result;
  result.severity = severity;
  result.thought = j.value("thought", "");
  if (severity > 0 && result.thought.empty())
    return Err("non-zero severity requires a thought");
  return result;
}

Result<CritiqueResult> critique(const tools::Observation& observation,
                                const std::vector<std::string>& artifact_paths,
                                tools::AgentRole role, agent::ModelClient& critic_client,
                                const prompts::PromptSet& prompts,
                                const tools::Workspace& workspace) {
  const char* prompt_name =
      role == tools::AgentRole::kResearcher ? "critic_researcher" : "critic_presenter";

  std::vector<ModelMessage> request;
  request.push_back(ModelMessage::text(Role::kSystem, prompts.get(prompt_name)));

  ModelMessage user;
  user.role = Role::kUser;
  std::string header = "Inspection observation:\n" + observation.joined_text();
  user.content.push_back(ContentPart::make_text(std::move(header)));
  for (const auto& part : observation.parts) {
    if (part.kind == ContentPart::Kind::kImage)
      user.content.push_back(part);
  }
  for (const auto& rel : artifact_paths) {
    auto abs = workspace.resolve(rel);
    if (!abs || !fs::exists(abs.value())) continue;
    const std::string ext = abs.value().extension().string();
    if (ext == ".png" || ext == ".jpg" || ext == ".jpeg") {
      auto bytes = workspace.read_text(rel);
      if (bytes && !bytes.value().empty()) {
        std::vector<std::uint8_t> raw(bytes.value().begin(), bytes.value().end());
        user.content.push_back(
            ContentPart::make_image(std::move(raw), ext == ".png" ? "image/png" : "image/jpeg"));
      }
      continue;
    }
    auto text = workspace.read_text(rel);
    if (text)
      user.content.push_back(
          ContentPart::make_text("Artifact " + rel + ":\n" + text.value()));
  }
  request.push_back(std::move(user));

  auto reply = critic_client.complete(request, json::array());
  if (reply) {
    auto parsed = parse_critique(reply.value().text);
    if (parsed) return parsed;
    // One re-ask with the format reminder; the context stays artifact-only.
    request.push_back(ModelMessage::text(
        Role::kUser, "Your reply was not valid. Return strict JSON only: "
                     "{\"severity\": <0-3 integer>, \"thought\": \"<analysis>\"}"));
    reply = critic_client.complete(request, json::array());
    if (reply) {
      parsed = parse_critique(reply.value().text);
      if (parsed) return parsed;
      return Err("critic_unavailable: " + parsed.error().message);
    }
  }
  return Err("critic_unavailable: " + reply.error().message);
}

bool inject_reflection(std::vector<ModelMessage>& context, const CritiqueResult& critique,
                       int ordinal) {
  if (critique.severity < 1) return false;
  agent::ToolCall think;
  think.id = "inject_" + std::to_string(ordinal);
  think.name = "thinking";
  think.arguments = json{{"thought", critique.thought}};
  ModelMessage assistant;
  assistant.role = Role::kAssistant;
  assistant.tool_calls.push_back(think);
  context.push_back(std::move(assistant));
  context.push_back(ModelMessage::tool_result(
      think.id, {ContentPart::make_text("Thought recorded.")}));
  return true;
}

pipeline::ReflectionFactory critic_reflection_factory(agent::ModelClient& critic_client,
                                                      const prompts::PromptSet& prompts,
                                                      std::vector<std::string>* flags) {
  return [&critic_client, &prompts, flags](const tools::Workspace& workspace,
                                           tools::AgentRole role) -> agent::ReflectionHook {
    return [&critic_client, &prompts, flags, &workspace, role](
               const agent::ToolCall& call,
               const tools::Observation& observation) -> std::optional<agent::InjectedReflection> {
      std::vector<std::string> artifacts;
      if (call.arguments.is_object() && call.arguments.contains("path") &&
          call.arguments.at("path").is_string())
        artifacts.push_back(call.arguments.at("path").get<std::string>());

      auto result = critique(observation, artifacts, role, critic_client, prompts, workspace);
      if (!result) {
        if (flags) flags->push_back(result.error().message);
        return std::nullopt;
      }
      if (result.value().severity < 1) return std::nullopt;
      return agent::InjectedReflection{result.value().thought};
    };
  };
}

}  // namespace deckhand::synth
