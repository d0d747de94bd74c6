#include "deckhand/eval/report.hpp"

#include <cstdio>
#include <sstream>

namespace deckhand::eval {

EvalReport aggregate(const std::vector<TaskScores>& per_task, double diversity) {
  EvalReport report;
  report.per_task = per_task;
  report.diversity = diversity;

  double constraint_sum = 0.0, content_sum = 0.0, style_sum = 0.0;
  for (const auto& t : per_task) {
    constraint_sum += t.constraint;
    if (t.judge) {
      content_sum += t.judge->content;
      style_sum += t.judge->style;
      ++report.scored_decks;
    } else {
      ++report.unscored_decks;
    }
  }
  if (!per_task.empty())
    report.constraint_mean = constraint_sum / static_cast<double>(per_task.size());
  if (report.scored_decks > 0) {
    report.content_mean = content_sum / report.scored_decks;
    report.style_mean = style_sum / report.scored_decks;
  }
  report.avg = (report.constraint_mean + report.content_mean + report.style_mean) / 3.0;
  return report;
}

std::string EvalReport::render() const {
  std::ostringstream out;
  char line[160];
  out << "Evaluation report (" << per_task.size() << " deck(s), " << scored_decks << " judged";
  if (unscored_decks > 0) out << ", " << unscored_decks << " unscored";
  out << ")\n";
  out << "  task              constraint  content  style\n";
  for (const auto& t : per_task) {
    if (t.judge)
      std::snprintf(line, sizeof(line), "  %-16s  %10.2f  %7.2f  %5.2f\n", t.task_id.c_str(),
                    t.constraint, t.judge->content, t.judge->style);
    else
      std::snprintf(line, sizeof(line), "  %-16s  %10.2f  %7s  %5s\n", t.task_id.c_str(),
                    t.constraint, "-", "-");
    out << line;
  }
  std::snprintf(line, sizeof(line),
                "  Constraint %.2f | Content %.2f | Style %.2f | Avg. %.2f | Diversity %.2f\n",
                constraint_mean, content_mean, style_mean, avg, diversity);
  out << line;
  return out.str();
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json tasks = nlohmann::json::array();
  for (const auto& t : report.per_task) {
    nlohmann::json j{{"task_id", t.task_id}, {"constraint", t.constraint}};
    if (t.judge) {
      j["content"] = t.judge->content;
      j["style"] = t.judge->style;
      j["rationale"] = t.judge->rationale;
    }
    tasks.push_back(std::move(j));
  }
  return nlohmann::json{{"per_task", tasks},
                        {"constraint", report.constraint_mean},
                        {"content", report.content_mean},
                        {"style", report.style_mean},
                        {"avg", report.avg},
                        {"diversity", report.diversity},
                        {"scored_decks", report.scored_decks},
                        {"unscored_decks", report.unscored_decks}};
}

}  // namespace deckhand::eval
