#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "deckhand/agent/message.hpp"
#include "deckhand/result.hpp"

namespace deckhand::agent {

enum class Phase { kResearcher, kPresenter };

std::string to_string(Phase phase);
Phase phase_from_string(const std::string& s);

enum class TrajectoryStatus {
  kCompleted,
  kFailedEnvironment,
  kFailedBudget,
  kFailedMaxSteps,
};

std::string to_string(TrajectoryStatus status);
TrajectoryStatus status_from_string(const std::string& s);

/// One (reasoning, action, observation) step of an agent phase.
struct TrajectoryStep {
  int index = 0;
  std::optional<std::string> reasoning;
  ToolCall action;
  std::vector<ContentPart> observation;
  int tokens_used_after = 0;
  bool injected = false;  // true for critic-injected thinking turns
};

struct Trajectory {
  std::string task_id;
  Phase phase = Phase::kResearcher;
  std::vector<TrajectoryStep> steps;
  TrajectoryStatus status = TrajectoryStatus::kFailedEnvironment;
  std::optional<std::string> finalize_payload;
  std::vector<std::string> artifacts;

  bool completed() const { return status == TrajectoryStatus::kCompleted; }
};

json to_json(const TrajectoryStep& step);
json to_json(const Trajectory& trajectory);
TrajectoryStep step_from_json(const json& j);
Trajectory trajectory_from_json(const json& j);

/// Canonical line-oriented persistence: one self-contained record per line.
/// The serialization carries no timestamps, so identical runs serialize to
/// identical bytes.
std::string to_jsonl_record(const Trajectory& trajectory);
Result<void> write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory);
Result<Trajectory> read_trajectory(const std::filesystem::path& path);

}  // namespace deckhand::agent
