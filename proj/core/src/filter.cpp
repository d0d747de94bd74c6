#include "deckhand/synth/filter.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "deckhand/verify/constraint.hpp"

namespace deckhand::synth {

namespace fs = std::filesystem;
using agent::ContentPart;
using agent::ModelMessage;
using agent::Role;

std::string to_string(FilterStage stage) {
  switch (stage) {
    case FilterStage::kEnvironment: return "environment";
    case FilterStage::kConstraint: return "constraint";
    case FilterStage::kConsistency: return "consistency";
    case FilterStage::kQuality: return "quality";
  }
  return "environment";
}

namespace {

std::string summarize_text(const std::string& text, std::size_t cap = 200) {
  if (text.size() <= cap) return text;
  std::size_t cut = cap;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xc0) == 0x80) --cut;
  return text.substr(0, cut) + "...";
}

void render_phase(const agent::Trajectory& trajectory, std::ostringstream& out) {
  out << "## " << agent::to_string(trajectory.phase)
      << " phase (status " << agent::to_string(trajectory.status) << ")\n";
  for (const auto& step : trajectory.steps) {
    if (step.injected) {
      out << "[" << step.index << "] injected reviewer reflection: "
          << step.action.arguments.value("thought", "") << "\n";
      continue;
    }
    out << "[" << step.index << "] action " << step.action.name << " "
        << summarize_text(step.action.arguments.dump(), 160) << "\n";
    std::string obs;
    for (const auto& part : step.observation) {
      if (part.kind == ContentPart::Kind::kText) obs += part.text + " ";
      else obs += "<image> ";
    }
    out << "      observation: " << summarize_text(obs) << "\n";
  }
}

/// Parses {"pass": bool, "reason": "..."} with the same leniency as the
/// critic parser.
Result<std::pair<bool, std::string>> parse_pass_reason(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    const std::size_t open = text.find('{');
    const std::size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close <= open)
      return Err("judge reply is not JSON");
    j = nlohmann::json::parse(text.substr(open, close - open + 1), nullptr, false);
    if (j.is_discarded()) return Err("judge reply is not JSON");
  }
  if (!j.is_object() || !j.contains("pass") || !j.at("pass").is_boolean())
    return Err("judge reply lacks a boolean 'pass'");
  return std::make_pair(j.at("pass").get<bool>(), j.value("reason", ""));
}

Result<std::pair<bool, std::string>> ask_judge(agent::ModelClient& judge,
                                               std::vector<ModelMessage> request) {
  auto reply = judge.complete(request, nlohmann::json::array());
  if (!reply) return Err("judge transport failure: " + reply.error().message);
  auto parsed = parse_pass_reason(reply.value().text);
  if (parsed) return parsed;
  request.push_back(ModelMessage::text(
      Role::kUser,
      "Your reply was not valid. Return strict JSON only: {\"pass\": true|false, "
      "\"reason\": \"<one sentence>\"}"));
  reply = judge.complete(request, nlohmann::json::array());
  if (!reply) return Err("judge transport failure: " + reply.error().message);
  parsed = parse_pass_reason(reply.value().text);
  if (!parsed) return Err("judge reply malformed twice: " + parsed.error().message);
  return parsed;
}

}  // namespace

std::string render_transcript(const pipeline::PipelineRun& run) {
  std::ostringstream out;
  out << "Task " << run.task_id << " constraints: " << verify::describe(run.task.constraints)
      << "\n";
  render_phase(run.researcher, out);
  if (run.presenter_ran) render_phase(run.presenter, out);
  return out.str();
}

FilterOutcome filter_trajectories(const std::vector<pipeline::PipelineRun>& runs,
                                  const FilterClients& clients) {
  FilterOutcome outcome;

  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& run = runs[i];
    FilterVerdict verdict;
    verdict.trajectory_id = run.task_id;

    // Pre-filter: environment failures have no deck to judge.
    if (!run.completed()) {
      verdict.stage = FilterStage::kEnvironment;
      verdict.category = "Environment";
      verdict.detail = !run.researcher.completed()
                           ? "researcher " + agent::to_string(run.researcher.status)
                           : (!run.presenter.completed()
                                  ? "presenter " + agent::to_string(run.presenter.status)
                                  : "deck assembly failed: " + run.assembly_error);
      outcome.verdicts.push_back(std::move(verdict));
      continue;
    }

    // Stage 1: rule-based constraint compliance, full satisfaction required.
    auto summary = verify::summarize_pdf(run.run_dir / run.deck_pdf_path);
    if (!summary) {
      verdict.stage = FilterStage::kEnvironment;
      verdict.category = "Environment";
      verdict.detail = "deck unparseable: " + summary.error().message;
      outcome.verdicts.push_back(std::move(verdict));
      continue;
    }
    const auto report = verify::check_constraints(run.task.constraints, summary.value());
    if (!report.all_pass()) {
      verdict.stage = FilterStage::kConstraint;
      verdict.category = "Constraint";
      std::string failing;
      for (const auto& c : report.checks) {
        if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.dimension;
      }
      char buf[128];
      std::snprintf(buf, sizeof(buf), "satisfied %.4f; failing: %s", report.satisfied_fraction,
                    failing.c_str());
      verdict.detail = buf;
      outcome.verdicts.push_back(std::move(verdict));
      continue;
    }

    // Stage 2: reflection-action consistency.
    if (clients.consistency_judge != nullptr && clients.prompts != nullptr) {
      std::vector<ModelMessage> request;
      request.push_back(
          ModelMessage::text(Role::kSystem, clients.prompts->get("judge_consistency")));
      request.push_back(ModelMessage::text(Role::kUser, render_transcript(run)));
      auto result = ask_judge(*clients.consistency_judge, std::move(request));
      if (!result) {
        verdict.stage = FilterStage::kConsistency;
        verdict.category = "deferred";
        verdict.detail = result.error().message;
        outcome.verdicts.push_back(std::move(verdict));
        continue;
      }
      if (!result.value().first) {
        verdict.stage = FilterStage::kConsistency;
        verdict.category = "Consistency";
        verdict.detail = result.value().second;
        outcome.verdicts.push_back(std::move(verdict));
        continue;
      }
    }

    // Stage 3: visual quality gate over the rendered slides.
    if (clients.quality_judge != nullptr && clients.prompts != nullptr &&
        clients.renderer != nullptr && !run.slides_dir.empty()) {
      std::vector<ModelMessage> request;
      request.push_back(ModelMessage::text(Role::kSystem, clients.prompts->get("judge_quality")));
      ModelMessage user;
      user.role = Role::kUser;
      user.content.push_back(ContentPart::make_text(
          "Rendered pages of the deck for task " + run.task_id + " follow."));
      const fs::path slides_abs = run.run_dir / run.slides_dir;
      std::vector<fs::path> slides;
      if (fs::is_directory(slides_abs)) {
        for (const auto& entry : fs::directory_iterator(slides_abs)) {
          if (entry.is_regular_file() && entry.path().extension() == ".html")
            slides.push_back(entry.path());
        }
      }
      std::sort(slides.begin(), slides.end());
      bool render_failed = false;
      for (const auto& slide : slides) {
        auto image = inspect::inspect_slide(slide, run.preset, *clients.renderer);
        if (!image) {
          render_failed = true;
          break;
        }
        user.content.push_back(ContentPart::make_image(image.value().png, "image/png"));
      }
      if (render_failed || slides.empty()) {
        verdict.stage = FilterStage::kQuality;
        verdict.category = "Environment";
        verdict.detail = "slides could not be rendered for judging";
        outcome.verdicts.push_back(std::move(verdict));
        continue;
      }
      request.push_back(std::move(user));
      auto result = ask_judge(*clients.quality_judge, std::move(request));
      if (!result) {
        verdict.stage = FilterStage::kQuality;
        verdict.category = "deferred";
        verdict.detail = result.error().message;
        outcome.verdicts.push_back(std::move(verdict));
        continue;
      }
      if (!result.value().first) {
        verdict.stage = FilterStage::kQuality;
        verdict.category = "Quality";
        verdict.detail = result.value().second;
        outcome.verdicts.push_back(std::move(verdict));
        continue;
      }
    }

    verdict.stage = FilterStage::kQuality;
    verdict.pass = true;
    verdict.category = "passed";
    outcome.passing.push_back(i);
    outcome.verdicts.push_back(std::move(verdict));
  }

  return outcome;
}

FailureDistribution categorize_failures(const std::vector<FilterVerdict>& verdicts) {
  FailureDistribution dist;
  for (const auto& category : failure_categories()) dist.counts[category] = 0;
  for (const auto& v : verdicts) {
    if (v.pass) continue;
    if (v.category == "deferred") {
      ++dist.deferred;
      continue;
    }
    if (dist.counts.count(v.category)) {
      ++dist.counts[v.category];
      ++dist.total_failures;
    }
  }
  for (const auto& category : failure_categories()) {
    dist.percentages[category] =
        dist.total_failures == 0
            ? 0.0
            : 100.0 * dist.counts[category] / static_cast<double>(dist.total_failures);
  }
  return dist;
}

std::string FailureDistribution::render() const {
  std::ostringstream out;
  out << "Failure distribution (" << total_failures << " failing run(s)";
  if (deferred > 0) out << ", " << deferred << " deferred";
  out << ")\n";
  char line[96];
  for (const auto& category : failure_categories()) {
    std::snprintf(line, sizeof(line), "  %-12s %4d  %6.1f%%\n", category.c_str(),
                  counts.at(category), percentages.at(category));
    out << line;
  }
  return out.str();
}

nlohmann::json to_json(const FailureDistribution& distribution) {
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json percentages = nlohmann::json::object();
  for (const auto& category : failure_categories()) {
    counts[category] = distribution.counts.at(category);
    percentages[category] = distribution.percentages.at(category);
  }
  return nlohmann::json{{"total_failures", distribution.total_failures},
                        {"deferred", distribution.deferred},
                        {"counts", counts},
                        {"percentages", percentages}};
}

}  // namespace deckhand::synth
