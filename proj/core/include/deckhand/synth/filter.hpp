#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "deckhand/agent/model_client.hpp"
#include "deckhand/inspect/render.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/prompts.hpp"

namespace deckhand::synth {

enum class FilterStage { kEnvironment, kConstraint, kConsistency, kQuality };

std::string to_string(FilterStage stage);

/// The four failure category labels used in reports.
inline const std::vector<std::string>& failure_categories() {
  static const std::vector<std::string> categories{"Quality", "Environment", "Constraint",
                                                   "Consistency"};
  return categories;
}

struct FilterVerdict {
  std::string trajectory_id;
  FilterStage stage = FilterStage::kEnvironment;
  bool pass = false;
  std::string category;  // passed | deferred | Quality | Environment | Constraint | Consistency
  std::string detail;
};

struct FilterClients {
  agent::ModelClient* consistency_judge = nullptr;
  agent::ModelClient* quality_judge = nullptr;
  inspect::RendererClient* renderer = nullptr;
  const prompts::PromptSet* prompts = nullptr;
};

struct FilterOutcome {
  std::vector<std::size_t> passing;  // indices into the input runs
  std::vector<FilterVerdict> verdicts;
};

/// Three-stage filter over synthesized runs. Runs without a deck are tagged
/// as environment failures before stage one; the stages short-circuit, so a
/// run is rejected by at most its first failing stage: rule-based constraint
/// compliance (full satisfaction required), then reflection-action
/// consistency, then a visual quality gate. Judge transport failures defer
/// the run rather than passing it silently.
FilterOutcome filter_trajectories(const std::vector<pipeline::PipelineRun>& runs,
                                  const FilterClients& clients);

/// Step transcript rendered for the consistency judge.
std::string render_transcript(const pipeline::PipelineRun& run);

struct FailureDistribution {
  int total_failures = 0;
  int deferred = 0;
  std::map<std::string, int> counts;        // the four categories, always present
  std::map<std::string, double> percentages;

  std::string render() const;
};

nlohmann::json to_json(const FailureDistribution& distribution);

/// Counts failing verdicts per category; percentages are of total failures.
FailureDistribution categorize_failures(const std::vector<FilterVerdict>& verdicts);

}  // namespace deckhand::synth
