#include "deckhand/batch.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "deckhand/eval/vendi.hpp"
#include "deckhand/synth/critic.hpp"
#include "deckhand/verify/constraint.hpp"

namespace deckhand::batch {

namespace fs = std::filesystem;

namespace {

pipeline::PipelineEnv make_env(const ClientBundle& clients, const Config& config) {
  pipeline::PipelineEnv env;
  env.researcher_model = clients.generation.get();
  env.presenter_model = clients.generation.get();
  env.helper_model = clients.generation.get();
  env.provider = clients.provider.get();
  env.renderer = clients.renderer.get();
  env.prompts = &clients.prompts;
  env.context_limit = config.context_limit;
  env.max_steps = config.max_steps;
  env.sandbox = config.sandbox;
  if (auto preset = inspect::preset_by_name(config.default_preset)) env.default_preset = *preset;
  return env;
}

Result<std::vector<std::vector<std::uint8_t>>> render_deck_slides(
    const pipeline::PipelineRun& run, inspect::RendererClient& renderer) {
  std::vector<fs::path> slides;
  const fs::path dir = run.run_dir / run.slides_dir;
  if (!fs::is_directory(dir)) return Err("no slides directory in " + run.run_dir.string());
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".html")
      slides.push_back(entry.path());
  }
  if (slides.empty()) return Err("no slides in " + dir.string());
  std::sort(slides.begin(), slides.end());
  std::vector<std::vector<std::uint8_t>> pngs;
  for (const auto& slide : slides) {
    auto image = inspect::inspect_slide(slide, run.preset, renderer);
    if (!image) return Err("render failed for " + slide.filename().string() + ": " +
                           image.error().message);
    pngs.push_back(std::move(image.value().png));
  }
  return pngs;
}

}  // namespace

Result<pipeline::PipelineRun> generate_run(const synth::TaskRecord& task, const fs::path& out_dir,
                                           const ClientBundle& clients, const Config& config) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  return pipeline::run_pipeline(task, out_dir / task.id, make_env(clients, config));
}

Result<SynthesisResult> synthesize_batch(const std::vector<synth::TaskRecord>& tasks,
                                         const fs::path& out_dir, const ClientBundle& clients,
                                         const Config& config) {
  if (tasks.empty()) return Err("no tasks to synthesize");
  std::error_code ec;
  fs::create_directories(out_dir, ec);

  SynthesisResult result;
  result.runs.resize(tasks.size());
  std::mutex flags_mutex;

  const pipeline::PipelineEnv env = make_env(clients, config);
  std::atomic<std::size_t> next{0};
  std::vector<std::string> critic_flags;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      std::vector<std::string> flags;
      pipeline::PipelineEnv run_env = env;
      run_env.reflection_factory = [&, flags_ptr = &flags](const tools::Workspace& workspace,
                                                           tools::AgentRole role) {
        return synth::critic_reflection_factory(*clients.critic, clients.prompts,
                                                flags_ptr)(workspace, role);
      };
      auto run = pipeline::run_pipeline(tasks[i], out_dir / tasks[i].id, run_env);
      if (run) {
        result.runs[i] = run.take();
      } else {
        // Setup failures count as environment losses for this task.
        result.runs[i].task_id = tasks[i].id;
        result.runs[i].task = tasks[i];
        result.runs[i].run_dir = out_dir / tasks[i].id;
        result.runs[i].assembly_error = run.error().message;
      }
      if (!flags.empty()) {
        std::lock_guard lock(flags_mutex);
        for (auto& f : flags) critic_flags.push_back(tasks[i].id + ": " + f);
      }
    }
  };

  const int workers = std::clamp(config.concurrency, 1, 16);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  result.critic_flags = std::move(critic_flags);
  std::sort(result.critic_flags.begin(), result.critic_flags.end());

  synth::FilterClients filter_clients;
  filter_clients.consistency_judge = clients.consistency_judge.get();
  filter_clients.quality_judge = clients.quality_judge.get();
  filter_clients.renderer = clients.renderer.get();
  filter_clients.prompts = &clients.prompts;
  result.filter = synth::filter_trajectories(result.runs, filter_clients);
  result.distribution = synth::categorize_failures(result.filter.verdicts);

  std::vector<synth::SftSample> samples;
  for (const std::size_t idx : result.filter.passing) {
    auto pair = synth::export_sft(result.runs[idx], clients.prompts, config.context_limit);
    if (!pair) continue;
    samples.push_back(std::move(pair.value().first));
    samples.push_back(std::move(pair.value().second));
    ++result.exported_pairs;
  }
  if (!samples.empty()) {
    result.dataset_path = out_dir / "sft_dataset.jsonl";
    if (auto written = synth::write_dataset(result.dataset_path, samples); !written)
      return written.error();
  }
  return result;
}

Result<EvaluationResult> evaluate_runs(const fs::path& runs_dir, const ClientBundle& clients,
                                       const Config& config) {
  (void)config;
  if (!fs::is_directory(runs_dir)) return Err("not a directory: " + runs_dir.string());

  std::vector<fs::path> run_dirs;
  for (const auto& entry : fs::directory_iterator(runs_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "task.json"))
      run_dirs.push_back(entry.path());
  }
  if (run_dirs.empty()) return Err("no run directories under " + runs_dir.string());
  std::sort(run_dirs.begin(), run_dirs.end());

  EvaluationResult result;
  std::vector<eval::TaskScores> per_task;
  std::vector<eval::DeckImages> decks;

  for (const auto& dir : run_dirs) {
    auto run = pipeline::load_run(dir);
    if (!run) {
      result.skipped.push_back(dir.filename().string() + ": " + run.error().message);
      continue;
    }
    if (run.value().deck_pdf_path.empty()) {
      result.skipped.push_back(dir.filename().string() + ": no deck.pdf");
      continue;
    }
    auto summary = verify::summarize_pdf(run.value().run_dir / run.value().deck_pdf_path);
    if (!summary) {
      result.skipped.push_back(dir.filename().string() + ": " + summary.error().message);
      continue;
    }

    eval::TaskScores scores;
    scores.task_id = run.value().task_id;
    scores.constraint =
        verify::check_constraints(run.value().task.constraints, summary.value()).scaled_score;

    auto pngs = render_deck_slides(run.value(), *clients.renderer);
    if (pngs) {
      auto judged = eval::judge_slides(pngs.value(), *clients.rubric_judge,
                                       clients.prompts.get("judge_rubric"));
      if (judged) scores.judge = judged.value();
      eval::DeckImages deck;
      deck.deck_id = run.value().task_id;
      deck.slide_pngs = std::move(pngs.value());
      decks.push_back(std::move(deck));
    }
    per_task.push_back(std::move(scores));
  }

  if (per_task.empty()) return Err("no evaluable decks found");

  double diversity = 0.0;
  auto extraction = eval::extract_features(decks, *clients.features);
  if (extraction) {
    auto vs = eval::vendi_score(extraction.value().features);
    if (vs) diversity = vs.value() / extraction.value().features.rows;
    for (const auto& excluded : extraction.value().excluded)
      result.skipped.push_back("feature extraction: " + excluded);
  }

  result.report = eval::aggregate(per_task, diversity);
  return result;
}

}  // namespace deckhand::batch
