#pragma once

#include <string>

#include "deckhand/tools/tool_spec.hpp"

namespace deckhand::agent {

/// Everything that parameterizes one agent phase: role, system prompt, and
/// which configured model endpoint drives it.
struct AgentProfile {
  tools::AgentRole role = tools::AgentRole::kResearcher;
  std::string system_prompt;
  std::string model_ref = "generation";
};

}  // namespace deckhand::agent
