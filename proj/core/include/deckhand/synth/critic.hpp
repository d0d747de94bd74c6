#pragma once

#include <string>
#include <vector>

#include "deckhand/agent/model_client.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/prompts.hpp"
#include "deckhand/result.hpp"
#include "deckhand/tools/dispatch.hpp"

namespace deckhand::synth {

/// Extrinsic critic verdict: defect severity 0-3 and a first-person trace.
struct CritiqueResult {
  int severity = 0;
  std::string thought;
};

/// Strict-JSON critique parser: {"severity": <0-3>, "thought": "..."}.
/// Out-of-range severity or a missing thought on a non-zero severity is a
/// parse failure.
Result<CritiqueResult> parse_critique(const std::string& reply_text);

/// Asks the critic to review one inspect observation in an isolated context:
/// the request holds only the reviewer prompt, the observation, and the
/// inspected artifacts - never agent history. One re-ask on malformed output;
/// a second failure reports critic_unavailable.
Result<CritiqueResult> critique(const tools::Observation& observation,
                                const std::vector<std::string>& artifact_paths,
                                tools::AgentRole role, agent::ModelClient& critic_client,
                                const prompts::PromptSet& prompts,
                                const tools::Workspace& workspace);

/// Appends the critique as a thinking tool turn (call + acknowledgment) iff
/// severity >= 1; the thought text is carried verbatim. Returns whether an
/// injection happened.
bool inject_reflection(std::vector<agent::ModelMessage>& context, const CritiqueResult& critique,
                       int ordinal);

/// Reflection hook factory for synthesis-mode pipelines: after every inspect
/// observation, run the critic and inject its trace when a defect is found.
/// Critic failures are recorded in `flags` (when given) and never stall the
/// rollout.
pipeline::ReflectionFactory critic_reflection_factory(agent::ModelClient& critic_client,
                                                      const prompts::PromptSet& prompts,
                                                      std::vector<std::string>* flags = nullptr);

}  // namespace deckhand::synth
