#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deckhand/agent/budget.hpp"
#include "deckhand/agent/model_client.hpp"
#include "deckhand/agent/profile.hpp"
#include "deckhand/agent/trajectory.hpp"
#include "deckhand/tools/dispatch.hpp"

namespace deckhand::agent {

/// Validates a finalize payload. Success returns the observation text that
/// closes the phase; an error becomes an error observation and the agent may
/// correct itself a bounded number of times.
using FinalizeHandler = std::function<Result<std::string>(const std::string& payload_path)>;

/// Critic injection produced right after an inspect observation. The thought
/// is appended to the context as a thinking tool turn, verbatim.
struct InjectedReflection {
  std::string thought;
};

using ReflectionHook = std::function<std::optional<InjectedReflection>(
    const ToolCall& call, const tools::Observation& observation)>;

struct LoopOptions {
  int max_steps = 60;
  int transport_retries = 2;
  int finalize_corrections = 2;
  FinalizeHandler finalize;
  ReflectionHook reflection;  // synthesis mode only
};

/// Drives one agent phase to completion: repeatedly asks the model for an
/// action, dispatches it, and feeds the observation back, enforcing the
/// context budget and halting on finalize, budget exhaustion, or the step
/// bound. All failure modes land in the trajectory status, never exceptions.
Trajectory run_agent_loop(const AgentProfile& profile, std::vector<ModelMessage> seed_messages,
                          const tools::ToolRegistry& registry, ModelClient& model,
                          ContextBudget& budget, tools::ToolContext& ctx,
                          const LoopOptions& options);

}  // namespace deckhand::agent
