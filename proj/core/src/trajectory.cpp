#include "deckhand/agent/trajectory.hpp"

#include <fstream>
#include <sstream>

namespace deckhand::agent {

std::string to_string(Phase phase) {
  return phase == Phase::kResearcher ? "researcher" : "presenter";
}

Phase phase_from_string(const std::string& s) {
  return s == "presenter" ? Phase::kPresenter : Phase::kResearcher;
}

std::string to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::kCompleted: return "completed";
    case TrajectoryStatus::kFailedEnvironment: return "failed_environment";
    case TrajectoryStatus::kFailedBudget: return "failed_budget";
    case TrajectoryStatus::kFailedMaxSteps: return "failed_max_steps";
  }
  return "failed_environment";
}

TrajectoryStatus status_from_string(const std::string& s) {
  if (s == "completed") return TrajectoryStatus::kCompleted;
  if (s == "failed_budget") return TrajectoryStatus::kFailedBudget;
  if (s == "failed_max_steps") return TrajectoryStatus::kFailedMaxSteps;
  return TrajectoryStatus::kFailedEnvironment;
}

json to_json(const TrajectoryStep& step) {
  json obs = json::array();
  for (const auto& part : step.observation) obs.push_back(to_json(part));
  json j{{"index", step.index},
         {"action", to_json(step.action)},
         {"observation", obs},
         {"tokens_used_after", step.tokens_used_after}};
  if (step.reasoning) j["reasoning"] = *step.reasoning;
  if (step.injected) j["injected"] = true;
  return j;
}

json to_json(const Trajectory& trajectory) {
  json steps = json::array();
  for (const auto& s : trajectory.steps) steps.push_back(to_json(s));
  json j{{"task_id", trajectory.task_id},
         {"phase", to_string(trajectory.phase)},
         {"status", to_string(trajectory.status)},
         {"steps", steps},
         {"artifacts", trajectory.artifacts}};
  if (trajectory.finalize_payload) j["finalize_payload"] = *trajectory.finalize_payload;
  return j;
}

TrajectoryStep step_from_json(const json& j) {
  TrajectoryStep s;
  s.index = j.value("index", 0);
  if (j.contains("reasoning")) s.reasoning = j.at("reasoning").get<std::string>();
  s.action = tool_call_from_json(j.at("action"));
  for (const auto& p : j.at("observation")) s.observation.push_back(content_part_from_json(p));
  s.tokens_used_after = j.value("tokens_used_after", 0);
  s.injected = j.value("injected", false);
  return s;
}

Trajectory trajectory_from_json(const json& j) {
  Trajectory t;
  t.task_id = j.value("task_id", "");
  t.phase = phase_from_string(j.value("phase", "researcher"));
  t.status = status_from_string(j.value("status", "failed_environment"));
  for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
  if (j.contains("finalize_payload"))
    t.finalize_payload = j.at("finalize_payload").get<std::string>();
  if (j.contains("artifacts"))
    t.artifacts = j.at("artifacts").get<std::vector<std::string>>();
  return t;
}

std::string to_jsonl_record(const Trajectory& trajectory) {
  return to_json(trajectory).dump();
}

Result<void> write_trajectory(const std::filesystem::path& path, const Trajectory& trajectory) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return Err("cannot open for writing: " + path.string());
  out << to_jsonl_record(trajectory) << "\n";
  if (!out) return Err("write failed: " + path.string());
  return {};
}

Result<Trajectory> read_trajectory(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Err("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.empty()) return Err("empty trajectory file: " + path.string());
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) return Err("malformed trajectory record: " + path.string());
  return trajectory_from_json(j);
}

}  // namespace deckhand::agent
