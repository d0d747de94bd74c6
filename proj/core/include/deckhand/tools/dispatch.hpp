#pragma once

#include <string>
#include <vector>

#include "deckhand/agent/message.hpp"
#include "deckhand/agent/model_client.hpp"
#include "deckhand/inspect/preset.hpp"
#include "deckhand/inspect/render.hpp"
#include "deckhand/tools/providers.hpp"
#include "deckhand/tools/tool_spec.hpp"
#include "deckhand/tools/workspace.hpp"

namespace deckhand::tools {

/// A tool's result as the agent sees it. Failures are observations, never
/// exceptions; `is_error` marks them for trajectory consumers.
struct Observation {
  std::vector<agent::ContentPart> parts;
  bool is_error = false;

  static Observation text(std::string body);
  static Observation error(std::string body);
  std::string joined_text() const;
};

/// Everything a tool execution may touch. Providers, renderer, and helper
/// model are shared and immutable; the workspace belongs to one trajectory.
struct ToolContext {
  const Workspace* workspace = nullptr;
  Provider* provider = nullptr;
  inspect::RendererClient* renderer = nullptr;
  agent::ModelClient* helper_model = nullptr;  // document_analyze / image_caption
  inspect::AspectPreset preset = inspect::widescreen_16_9();
  std::vector<std::string>* artifacts = nullptr;  // produced paths, collected per run
};

/// Executes a registered tool call. Unknown names, malformed arguments,
/// sandbox violations, and provider failures all come back as error
/// observations.
Observation dispatch(const ToolRegistry& registry, const agent::ToolCall& call, ToolContext& ctx);

}  // namespace deckhand::tools
