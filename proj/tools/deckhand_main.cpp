// deckhand CLI: generate decks, verify them against constraints, synthesize
// filtered SFT trajectories, evaluate run corpora, and inspect artifacts.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "deckhand/batch.hpp"
#include "deckhand/config.hpp"
#include "deckhand/inspect/manuscript.hpp"
#include "deckhand/synth/task.hpp"
#include "deckhand/verify/constraint.hpp"

namespace fs = std::filesystem;
using namespace deckhand;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

struct CliState {
  Config config;
  std::string language_flag;
  std::string aspect_flag;
  std::string count_flag;
};

void add_config_options(CLI::App& app, Config& config) {
  app.set_config("--config", "", "Configuration file (TOML-style key = value)");
  app.add_flag("--stub", config.stub_mode,
               "Deterministic offline mode: in-process model/judge/provider stubs, zero network");
  app.add_option("--seed", config.seed, "RNG seed for task construction");
  app.add_option("--workspace", config.workspace_root, "Root directory for run workspaces");
  app.add_option("--preset", config.default_preset,
                 "Aspect preset for tasks without an aspect constraint");
  app.add_option("--concurrency", config.concurrency, "Parallel rollouts in batch commands");
  app.add_option("--context-limit", config.context_limit, "Context window budget in tokens");
  app.add_option("--max-steps", config.max_steps, "Model dispatch bound per phase");
  app.add_option("--prompt-dir", config.prompt_dir, "Directory of prompt overrides (*.txt)");
  app.add_option("--fixture-dir", config.fixture_dir, "Stub provider fixture directory");
  app.add_option("--generation-url", config.generation.base_url, "Generation endpoint base URL");
  app.add_option("--generation-model", config.generation.model, "Generation model name");
  app.add_option("--generation-key-env", config.generation.api_key_env,
                 "Env var holding the generation credential");
  app.add_option("--critic-url", config.critic.base_url, "Critic endpoint base URL");
  app.add_option("--critic-model", config.critic.model, "Critic model name");
  app.add_option("--critic-key-env", config.critic.api_key_env, "Env var for the critic credential");
  app.add_option("--consistency-url", config.consistency_judge.base_url,
                 "Consistency judge base URL");
  app.add_option("--quality-url", config.quality_judge.base_url, "Quality judge base URL");
  app.add_option("--feature-url", config.feature_extractor.base_url,
                 "Feature extractor base URL");
  app.add_option("--provider-url", config.tool_provider.base_url,
                 "Search/fetch tool provider base URL");
  app.add_option("--renderer-binary", config.renderer.binary_path,
                 "Headless browser binary (empty = built-in rasterizer)");
  app.add_option("--renderer-pool", config.renderer.pool_size, "Concurrent page renders");
}

Result<synth::TaskRecord> load_single_task(const std::string& task_file) {
  auto tasks = synth::read_tasks(task_file);
  if (!tasks) return tasks.error();
  return tasks.value().front();
}

verify::ConstraintSpec spec_from_flags(const CliState& state) {
  verify::ConstraintSpec spec;
  if (!state.language_flag.empty()) {
    spec.language = state.language_flag == "zh" ? inspect::Language::kChinese
                                                : inspect::Language::kEnglish;
  }
  if (!state.aspect_flag.empty()) spec.aspect = state.aspect_flag;
  if (!state.count_flag.empty()) {
    const std::size_t dash = state.count_flag.find('-');
    if (dash == std::string::npos) {
      const int n = std::atoi(state.count_flag.c_str());
      spec.slide_count = verify::SlideCountRange{n, n};
    } else {
      spec.slide_count =
          verify::SlideCountRange{std::atoi(state.count_flag.substr(0, dash).c_str()),
                                  std::atoi(state.count_flag.substr(dash + 1).c_str())};
    }
  }
  return spec;
}

int cmd_generate(const CliState& state, const std::string& task_file) {
  auto task = load_single_task(task_file);
  if (!task) {
    std::cerr << "error: " << task.error().message << "\n";
    return kExitUsage;
  }
  auto clients = build_clients(state.config);
  if (!clients) {
    std::cerr << "error: " << clients.error().message << "\n";
    return kExitUsage;
  }
  auto run = batch::generate_run(task.value(), state.config.workspace_root, clients.value(),
                                 state.config);
  if (!run) {
    std::cerr << "error: " << run.error().message << "\n";
    return kExitDomainFailure;
  }
  const auto& r = run.value();
  std::cout << "run directory: " << r.run_dir.string() << "\n"
            << "researcher: " << agent::to_string(r.researcher.status) << " ("
            << r.researcher.steps.size() << " step(s))\n";
  if (r.presenter_ran)
    std::cout << "presenter:  " << agent::to_string(r.presenter.status) << " ("
              << r.presenter.steps.size() << " step(s))\n";
  else
    std::cout << "presenter:  not run\n";
  int slide_count = 0;
  if (!r.slides_dir.empty()) {
    for (const auto& entry : fs::directory_iterator(r.run_dir / r.slides_dir)) {
      if (entry.path().extension() == ".html") ++slide_count;
    }
  }
  std::cout << "slides: " << slide_count << "\n";
  if (!r.deck_pdf_path.empty())
    std::cout << "deck: " << (r.run_dir / r.deck_pdf_path).string() << "\n";
  else
    std::cout << "deck: not produced"
              << (r.assembly_error.empty() ? "" : " (" + r.assembly_error + ")") << "\n";
  return r.completed() ? kExitOk : kExitDomainFailure;
}

int cmd_verify(const CliState& state, const std::string& pdf_path, const std::string& task_file,
               const std::string& json_out) {
  verify::ConstraintSpec spec = spec_from_flags(state);
  if (!task_file.empty()) {
    auto task = load_single_task(task_file);
    if (!task) {
      std::cerr << "error: " << task.error().message << "\n";
      return kExitUsage;
    }
    spec = task.value().constraints;
  }
  auto summary = verify::summarize_pdf(fs::path(pdf_path));
  if (!summary) {
    std::cerr << "error: " << summary.error().message << "\n";
    return kExitDomainFailure;
  }
  const auto report = verify::check_constraints(spec, summary.value());
  std::cout << "deck: " << pdf_path << " (" << summary.value().page_count << " page(s))\n"
            << report.render();
  const std::string out_path = json_out.empty() ? pdf_path + ".report.json" : json_out;
  std::ofstream out(out_path, std::ios::binary);
  if (out) out << verify::to_json(report).dump(2) << "\n";
  return report.all_pass() ? kExitOk : kExitDomainFailure;
}

int cmd_synthesize(const CliState& state, const std::string& task_file,
                   const std::string& out_dir) {
  auto tasks = synth::read_tasks(task_file);
  if (!tasks) {
    std::cerr << "error: " << tasks.error().message << "\n";
    return kExitUsage;
  }
  auto clients = build_clients(state.config);
  if (!clients) {
    std::cerr << "error: " << clients.error().message << "\n";
    return kExitUsage;
  }
  const fs::path out = out_dir.empty() ? fs::path(state.config.workspace_root) : fs::path(out_dir);
  auto result = batch::synthesize_batch(tasks.value(), out, clients.value(), state.config);
  if (!result) {
    std::cerr << "error: " << result.error().message << "\n";
    return kExitDomainFailure;
  }
  const auto& r = result.value();
  std::cout << "rollouts: " << r.runs.size() << "\n";
  for (const auto& verdict : r.filter.verdicts) {
    std::cout << "  " << verdict.trajectory_id << ": "
              << (verdict.pass ? "pass" : "rejected at " + synth::to_string(verdict.stage) +
                                              " [" + verdict.category + "]")
              << (verdict.detail.empty() ? "" : " - " + verdict.detail) << "\n";
  }
  std::cout << r.distribution.render();
  {
    std::ofstream dist_out(out / "failure_distribution.json", std::ios::binary);
    if (dist_out) dist_out << synth::to_json(r.distribution).dump(2) << "\n";
  }
  for (const auto& flag : r.critic_flags) std::cout << "critic flag: " << flag << "\n";
  if (r.exported_pairs > 0)
    std::cout << "dataset: " << r.dataset_path.string() << " (" << r.exported_pairs
              << " sample pair(s))\n";
  else
    std::cout << "dataset: empty (no runs passed filtering)\n";
  return kExitOk;
}

int cmd_evaluate(const CliState& state, const std::string& runs_dir, const std::string& json_out) {
  auto clients = build_clients(state.config);
  if (!clients) {
    std::cerr << "error: " << clients.error().message << "\n";
    return kExitUsage;
  }
  auto result = batch::evaluate_runs(runs_dir, clients.value(), state.config);
  if (!result) {
    std::cerr << "error: " << result.error().message << "\n";
    return kExitDomainFailure;
  }
  std::cout << result.value().report.render();
  for (const auto& skipped : result.value().skipped)
    std::cout << "skipped: " << skipped << "\n";
  const std::string out_path =
      json_out.empty() ? (fs::path(runs_dir) / "eval_report.json").string() : json_out;
  std::ofstream out(out_path, std::ios::binary);
  if (out) out << eval::to_json(result.value().report).dump(2) << "\n";
  return kExitOk;
}

int cmd_inspect_manuscript(const CliState& state, const std::string& path) {
  const fs::path abs = fs::absolute(path);
  tools::Workspace workspace(abs.parent_path(), state.config.sandbox);
  auto diag = inspect::inspect_manuscript(abs.filename().string(), workspace);
  if (!diag) {
    std::cerr << "error: " << diag.error().message << "\n";
    return kExitDomainFailure;
  }
  std::cout << diag.value().render();
  return kExitOk;
}

int cmd_inspect_slide(const CliState& state, const std::string& path,
                      const std::string& preset_name) {
  auto preset = inspect::preset_by_name(preset_name);
  if (!preset) {
    std::cerr << "error: unknown preset '" << preset_name << "'\n";
    return kExitUsage;
  }
  auto clients = build_clients(state.config);
  if (!clients) {
    std::cerr << "error: " << clients.error().message << "\n";
    return kExitUsage;
  }
  auto image = inspect::inspect_slide(fs::path(path), *preset, *clients.value().renderer);
  if (!image) {
    std::cerr << "error: " << image.error().message << "\n";
    return kExitDomainFailure;
  }
  const fs::path out_png = fs::path(path).replace_extension(".png");
  std::ofstream out(out_png, std::ios::binary);
  out.write(reinterpret_cast<const char*>(image.value().png.data()),
            static_cast<std::streamsize>(image.value().png.size()));
  std::cout << "rendered " << path << " at " << image.value().width << "x"
            << image.value().height << " -> " << out_png.string() << "\n";
  return kExitOk;
}

int cmd_replay(const std::string& trajectory_file) {
  auto trajectory = agent::read_trajectory(trajectory_file);
  if (!trajectory) {
    std::cerr << "error: " << trajectory.error().message << "\n";
    return kExitDomainFailure;
  }
  const auto& t = trajectory.value();
  std::cout << "task " << t.task_id << " | " << agent::to_string(t.phase) << " | "
            << agent::to_string(t.status) << " | " << t.steps.size() << " step(s)\n";
  for (const auto& step : t.steps) {
    std::cout << "[" << step.index << "]" << (step.injected ? " (injected)" : "") << " "
              << step.action.name << " " << step.action.arguments.dump() << "\n";
    if (step.reasoning) std::cout << "    reasoning: " << *step.reasoning << "\n";
    for (const auto& part : step.observation) {
      if (part.kind == agent::ContentPart::Kind::kText) {
        std::string text = part.text;
        if (text.size() > 300) text = text.substr(0, 300) + "...";
        std::cout << "    obs: " << text << "\n";
      } else {
        std::cout << "    obs: <image " << part.media_type << ", " << part.image_bytes.size()
                  << " bytes>\n";
      }
    }
    std::cout << "    tokens_used_after: " << step.tokens_used_after << "\n";
  }
  if (t.finalize_payload) std::cout << "finalize payload: " << *t.finalize_payload << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deckhand: dual-agent slide deck generation, verification, and evaluation"};
  app.require_subcommand(1);

  CliState state;
  add_config_options(app, state.config);

  std::string task_file, pdf_path, runs_dir, out_dir, json_out;
  std::string manuscript_path, slide_path, trajectory_file;
  std::string preset_name = "widescreen_16_9";

  auto* generate = app.add_subcommand("generate", "Run the two-phase pipeline for one task");
  generate->add_option("task_file", task_file, "Task file (JSONL, first record used)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a deck PDF against constraints");
  verify_cmd->add_option("pdf", pdf_path, "Deck PDF path")->required();
  verify_cmd->add_option("--task", task_file, "Task file providing the constraint spec");
  verify_cmd->add_option("--language", state.language_flag, "Expected language (en|zh)");
  verify_cmd->add_option("--aspect", state.aspect_flag,
                         "Expected aspect preset (widescreen_16_9|standard_4_3|poster_a1)");
  verify_cmd->add_option("--count", state.count_flag, "Expected slide count (N or LO-HI)");
  verify_cmd->add_option("--json-out", json_out, "Where to write the machine-readable report");

  auto* synthesize = app.add_subcommand("synthesize",
                                        "Rollouts with critic injection, filtering, SFT export");
  synthesize->add_option("task_file", task_file, "Task file (JSONL)")->required();
  synthesize->add_option("--out", out_dir, "Output directory (default: workspace root)");

  auto* evaluate = app.add_subcommand("evaluate", "Score a directory of runs");
  evaluate->add_option("runs_dir", runs_dir, "Directory containing run subdirectories")
      ->required();
  evaluate->add_option("--json-out", json_out, "Where to write the machine-readable report");

  auto* inspect_cmd = app.add_subcommand("inspect", "Inspect a manuscript or slide");
  inspect_cmd->add_option("--manuscript", manuscript_path, "Markdown manuscript path");
  inspect_cmd->add_option("--slide", slide_path, "Slide HTML path");
  inspect_cmd->add_option("--preset", preset_name, "Aspect preset for slide rendering");

  auto* replay = app.add_subcommand("replay", "Pretty-print a persisted trajectory");
  replay->add_option("trajectory", trajectory_file, "trajectory.*.jsonl path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(state, task_file);
    if (verify_cmd->parsed()) return cmd_verify(state, pdf_path, task_file, json_out);
    if (synthesize->parsed()) return cmd_synthesize(state, task_file, out_dir);
    if (evaluate->parsed()) return cmd_evaluate(state, runs_dir, json_out);
    if (inspect_cmd->parsed()) {
      if (!manuscript_path.empty()) return cmd_inspect_manuscript(state, manuscript_path);
      if (!slide_path.empty()) return cmd_inspect_slide(state, slide_path, preset_name);
      std::cerr << "error: inspect requires --manuscript or --slide\n";
      return kExitUsage;
    }
    if (replay->parsed()) return cmd_replay(trajectory_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
  return kExitUsage;
}
