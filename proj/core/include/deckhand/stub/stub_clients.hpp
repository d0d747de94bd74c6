#pragma once

#include <memory>

#include "deckhand/agent/model_client.hpp"
#include "deckhand/synth/task.hpp"

namespace deckhand::stub {

/// Rule-based stand-in for the generation model: reads the machine-readable
/// task block from the seed message and walks a fixed researcher or presenter
/// script (plan, gather, write, inspect, finalize). Stateless across calls -
/// the next action is derived from the conversation alone - so one instance
/// serves any number of concurrent trajectories deterministically.
class PlannerModelClient : public agent::ModelClient {
 public:
  Result<agent::ModelResponse> complete(const std::vector<agent::ModelMessage>& messages,
                                        const agent::json& tools) override;
};

/// Critic stub: reports no defects (severity 0).
class CleanCriticClient : public agent::ModelClient {
 public:
  Result<agent::ModelResponse> complete(const std::vector<agent::ModelMessage>& messages,
                                        const agent::json& tools) override;
};

/// Pass-everything consistency/quality judge stub.
class PassJudgeClient : public agent::ModelClient {
 public:
  Result<agent::ModelResponse> complete(const std::vector<agent::ModelMessage>& messages,
                                        const agent::json& tools) override;
};

/// Rubric judge stub: deterministic content/style scores derived from the
/// conversation hash, spread over 3-5.
class ScoringJudgeClient : public agent::ModelClient {
 public:
  Result<agent::ModelResponse> complete(const std::vector<agent::ModelMessage>& messages,
                                        const agent::json& tools) override;
};

/// Planner internals exposed for tests: the manuscript the researcher script
/// writes for a task, and the slide HTML the presenter script writes.
std::string stub_manuscript(const synth::TaskRecord& task, const std::string& image_rel);
std::string stub_slide_html(const synth::TaskRecord& task, int slide_index,
                            const std::string& slide_text, int width_px, int height_px);

}  // namespace deckhand::stub
