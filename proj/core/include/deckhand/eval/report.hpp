#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deckhand/eval/judge.hpp"

namespace deckhand::eval {

struct TaskScores {
  std::string task_id;
  double constraint = 0.0;              // 0-5
  std::optional<JudgeScore> judge;      // absent when the deck went unscored
};

/// Corpus-level metric report mirroring the evaluation columns: Constraint,
/// Content, Style, Avg. (their mean), and Diversity (Vendi score / n).
struct EvalReport {
  std::vector<TaskScores> per_task;
  double constraint_mean = 0.0;
  double content_mean = 0.0;
  double style_mean = 0.0;
  double avg = 0.0;
  double diversity = 0.0;
  int scored_decks = 0;
  int unscored_decks = 0;

  std::string render() const;
};

nlohmann::json to_json(const EvalReport& report);

/// Combines per-task scores with the corpus diversity ratio. Unscored decks
/// are excluded from the content/style means and counted.
EvalReport aggregate(const std::vector<TaskScores>& per_task, double diversity);

}  // namespace deckhand::eval
