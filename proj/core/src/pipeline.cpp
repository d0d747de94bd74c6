#include "deckhand/pipeline/run.hpp"

#include <algorithm>
#include <fstream>

#include "deckhand/inspect/manuscript.hpp"
#include "deckhand/pdf/writer.hpp"

namespace deckhand::pipeline {

namespace fs = std::filesystem;
using agent::ModelMessage;
using agent::Role;

Result<FinalizeRecord> handle_finalize(tools::AgentRole role, const std::string& payload_path,
                                       const tools::Workspace& workspace) {
  auto abs = workspace.resolve(payload_path);
  if (!abs) return abs.error();

  if (role == tools::AgentRole::kResearcher) {
    if (!fs::exists(abs.value())) return Err("manuscript path does not exist: " + payload_path);
    if (fs::is_directory(abs.value()))
      return Err("finalize expects the manuscript file, got a directory: " + payload_path);
    const std::string ext = abs.value().extension().string();
    if (ext != ".md" && ext != ".markdown")
      return Err("manuscript must be a markdown file (.md): " + payload_path);
    auto diag = inspect::inspect_manuscript(payload_path, workspace);
    if (!diag) return Err("manuscript failed inspection: " + diag.error().message);
    FinalizeRecord record;
    record.role = role;
    record.path = payload_path;
    return record;
  }

  if (!fs::exists(abs.value()) || !fs::is_directory(abs.value()))
    return Err("finalize expects the slides directory: " + payload_path);
  std::vector<std::string> slides;
  for (const auto& entry : fs::directory_iterator(abs.value())) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == ".html") slides.push_back(entry.path().filename().string());
  }
  if (slides.empty()) return Err("slides directory contains no .html files: " + payload_path);
  std::sort(slides.begin(), slides.end());
  FinalizeRecord record;
  record.role = role;
  record.path = payload_path;
  record.slide_files = std::move(slides);
  return record;
}

Result<fs::path> assemble_pdf(const fs::path& slides_dir, const inspect::AspectPreset& preset,
                              inspect::RendererClient& renderer, const fs::path& out_pdf) {
  if (!fs::is_directory(slides_dir)) return Err("not a directory: " + slides_dir.string());
  std::vector<fs::path> slides;
  for (const auto& entry : fs::directory_iterator(slides_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".html")
      slides.push_back(entry.path());
  }
  if (slides.empty()) return Err("no .html slides in " + slides_dir.string());
  std::sort(slides.begin(), slides.end());

  std::vector<pdf::PageSpec> pages;
  pages.reserve(slides.size());
  for (const auto& slide : slides) {
    auto rendered = renderer.render(slide, preset.width_px, preset.height_px);
    if (!rendered)
      return Err("failed to render " + slide.filename().string() + ": " +
                 rendered.error().message);
    pdf::PageSpec page;
    page.width_pt = inspect::px_to_pt(preset.width_px);
    page.height_pt = inspect::px_to_pt(preset.height_px);
    page.raster = std::move(rendered.value().raster);
    page.text = std::move(rendered.value().text);
    pages.push_back(std::move(page));
  }
  const auto bytes = pdf::write_pdf(pages);
  std::ofstream out(out_pdf, std::ios::binary | std::ios::trunc);
  if (!out) return Err("cannot write " + out_pdf.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) return Err("write failed: " + out_pdf.string());
  return out_pdf;
}

inspect::AspectPreset resolve_preset(const synth::TaskRecord& task) {
  return resolve_preset(task, inspect::widescreen_16_9());
}

inspect::AspectPreset resolve_preset(const synth::TaskRecord& task,
                                     const inspect::AspectPreset& fallback) {
  if (task.constraints.aspect) {
    if (auto preset = inspect::preset_by_name(*task.constraints.aspect)) return *preset;
  }
  return fallback;
}

std::vector<ModelMessage> researcher_seed(const synth::TaskRecord& task,
                                          const prompts::PromptSet& prompts) {
  std::vector<ModelMessage> seed;
  seed.push_back(ModelMessage::text(Role::kSystem, prompts.get("researcher_system")));
  std::string user = task.instruction;
  user += "\n\nTask constraints: " + verify::describe(task.constraints) + ".";
  if (!task.attachments.empty()) {
    user += "\nAttachments (workspace-relative):";
    for (const auto& a : task.attachments) user += "\n- " + a;
  }
  user += "\n\nMachine-readable task:\n```json\n" + synth::to_json(task).dump() + "\n```";
  seed.push_back(ModelMessage::text(Role::kUser, user));
  return seed;
}

std::vector<ModelMessage> presenter_seed(const synth::TaskRecord& task,
                                         const std::string& manuscript_rel,
                                         const std::string& manuscript_text,
                                         const inspect::AspectPreset& preset,
                                         const prompts::PromptSet& prompts, int context_limit) {
  std::vector<ModelMessage> seed;
  seed.push_back(ModelMessage::text(Role::kSystem, prompts.get("presenter_system")));
  std::string user = "The research manuscript is at " + manuscript_rel +
                     ". Turn it into one standalone HTML file per slide under slides/.";
  user += "\nAspect preset: " + preset.name + " (" + std::to_string(preset.width_px) + "px x " +
          std::to_string(preset.height_px) + "px).";
  user += "\nTask constraints: " + verify::describe(task.constraints) + ".";
  user += "\n\nMachine-readable task:\n```json\n" + synth::to_json(task).dump() + "\n```";

  // Inline the manuscript so small models need not re-read it, bounded so the
  // seed cannot blow the context budget by itself.
  const std::size_t cap = static_cast<std::size_t>(context_limit) * 2;
  std::string body = manuscript_text;
  if (body.size() > cap) {
    std::size_t cut = cap;
    while (cut > 0 && (static_cast<unsigned char>(body[cut]) & 0xc0) == 0x80) --cut;
    body.resize(cut);
    body += "\n[manuscript truncated; read the file for the rest]";
  }
  user += "\n\nManuscript content:\n---BEGIN MANUSCRIPT---\n" + body + "\n---END MANUSCRIPT---";
  seed.push_back(ModelMessage::text(Role::kUser, user));
  return seed;
}

namespace {

void persist_run_summary(const PipelineRun& run) {
  nlohmann::json j{{"task_id", run.task_id},
                   {"preset", run.preset.name},
                   {"researcher_status", agent::to_string(run.researcher.status)},
                   {"presenter_ran", run.presenter_ran},
                   {"presenter_status", run.presenter_ran
                                            ? agent::to_string(run.presenter.status)
                                            : std::string("not_run")},
                   {"slides_dir", run.slides_dir},
                   {"deck_pdf", run.deck_pdf_path},
                   {"assembly_error", run.assembly_error}};
  std::ofstream out(run.run_dir / "run.json", std::ios::binary);
  out << j.dump(2) << "\n";
}

}  // namespace

Result<PipelineRun> run_pipeline(const synth::TaskRecord& task, const fs::path& run_dir,
                                 const PipelineEnv& env) {
  if (env.researcher_model == nullptr || env.presenter_model == nullptr ||
      env.provider == nullptr || env.renderer == nullptr || env.prompts == nullptr)
    return Err("pipeline environment is incomplete");

  PipelineRun run;
  run.task_id = task.id;
  run.task = task;
  run.run_dir = run_dir;
  run.preset = resolve_preset(task, env.default_preset);

  tools::Workspace workspace(run_dir, env.sandbox);
  {
    std::ofstream task_out(run_dir / "task.json", std::ios::binary);
    if (!task_out) return Err("cannot create run directory at " + run_dir.string());
    task_out << synth::to_json(task).dump(2) << "\n";
  }

  // --- Researcher phase ---
  agent::AgentProfile researcher_profile;
  researcher_profile.role = tools::AgentRole::kResearcher;
  researcher_profile.system_prompt = env.prompts->get("researcher_system");

  const tools::ToolRegistry researcher_registry = tools::build_registry(tools::AgentRole::kResearcher);
  tools::ToolContext researcher_ctx;
  researcher_ctx.workspace = &workspace;
  researcher_ctx.provider = env.provider;
  researcher_ctx.renderer = env.renderer;
  researcher_ctx.helper_model = env.helper_model;
  researcher_ctx.preset = run.preset;

  agent::ContextBudget researcher_budget;
  researcher_budget.limit_tokens = env.context_limit;

  Handoff handoff;
  agent::LoopOptions researcher_options;
  researcher_options.max_steps = env.max_steps;
  researcher_options.finalize = [&](const std::string& payload) -> Result<std::string> {
    auto record = handle_finalize(tools::AgentRole::kResearcher, payload, workspace);
    if (!record) return record.error();
    handoff.manuscript_path = record.value().path;
    return std::string("Handoff accepted: manuscript at " + record.value().path);
  };
  if (env.reflection_factory)
    researcher_options.reflection = env.reflection_factory(workspace, tools::AgentRole::kResearcher);

  run.researcher =
      agent::run_agent_loop(researcher_profile, researcher_seed(task, *env.prompts),
                            researcher_registry, *env.researcher_model, researcher_budget,
                            researcher_ctx, researcher_options);
  run.researcher.task_id = task.id;
  agent::write_trajectory(run_dir / "trajectory.researcher.jsonl", run.researcher);

  if (!run.researcher.completed()) {
    persist_run_summary(run);
    return run;  // researcher failure aborts the run; status travels with it
  }

  // --- Presenter phase ---
  auto manuscript_text = workspace.read_text(handoff.manuscript_path);
  if (!manuscript_text) {
    run.researcher.status = agent::TrajectoryStatus::kFailedEnvironment;
    persist_run_summary(run);
    return run;
  }

  agent::AgentProfile presenter_profile;
  presenter_profile.role = tools::AgentRole::kPresenter;
  presenter_profile.system_prompt = env.prompts->get("presenter_system");

  const tools::ToolRegistry presenter_registry = tools::build_registry(tools::AgentRole::kPresenter);
  tools::ToolContext presenter_ctx;
  presenter_ctx.workspace = &workspace;
  presenter_ctx.provider = env.provider;
  presenter_ctx.renderer = env.renderer;
  presenter_ctx.helper_model = env.helper_model;
  presenter_ctx.preset = run.preset;

  agent::ContextBudget presenter_budget;
  presenter_budget.limit_tokens = env.context_limit;

  FinalizeRecord slides_record;
  agent::LoopOptions presenter_options;
  presenter_options.max_steps = env.max_steps;
  presenter_options.finalize = [&](const std::string& payload) -> Result<std::string> {
    auto record = handle_finalize(tools::AgentRole::kPresenter, payload, workspace);
    if (!record) return record.error();
    slides_record = record.value();
    return std::string("Slides accepted: " + std::to_string(record.value().slide_files.size()) +
                       " file(s) in " + record.value().path);
  };
  if (env.reflection_factory)
    presenter_options.reflection = env.reflection_factory(workspace, tools::AgentRole::kPresenter);

  run.presenter = agent::run_agent_loop(
      presenter_profile,
      presenter_seed(task, handoff.manuscript_path, manuscript_text.value(), run.preset,
                     *env.prompts, env.context_limit),
      presenter_registry, *env.presenter_model, presenter_budget, presenter_ctx,
      presenter_options);
  run.presenter.task_id = task.id;
  run.presenter_ran = true;
  agent::write_trajectory(run_dir / "trajectory.presenter.jsonl", run.presenter);

  if (run.presenter.completed()) {
    run.slides_dir = slides_record.path;
    auto slides_abs = workspace.resolve(slides_record.path);
    if (slides_abs) {
      auto deck = assemble_pdf(slides_abs.value(), run.preset, *env.renderer,
                               run_dir / "deck.pdf");
      if (deck) run.deck_pdf_path = "deck.pdf";
      else run.assembly_error = deck.error().message;
    }
  }

  persist_run_summary(run);
  return run;
}

Result<PipelineRun> load_run(const fs::path& run_dir) {
  std::ifstream task_in(run_dir / "task.json", std::ios::binary);
  if (!task_in) return Err("no task.json in " + run_dir.string());
  nlohmann::json task_json = nlohmann::json::parse(task_in, nullptr, false);
  if (task_json.is_discarded()) return Err("malformed task.json in " + run_dir.string());

  PipelineRun run;
  run.task = synth::task_from_json(task_json);
  run.task_id = run.task.id;
  run.run_dir = run_dir;
  run.preset = resolve_preset(run.task);

  auto researcher = agent::read_trajectory(run_dir / "trajectory.researcher.jsonl");
  if (!researcher) return Err("missing researcher trajectory: " + researcher.error().message);
  run.researcher = researcher.take();

  if (fs::exists(run_dir / "trajectory.presenter.jsonl")) {
    auto presenter = agent::read_trajectory(run_dir / "trajectory.presenter.jsonl");
    if (!presenter) return Err("unreadable presenter trajectory: " + presenter.error().message);
    run.presenter = presenter.take();
    run.presenter_ran = true;
    if (run.presenter.finalize_payload) run.slides_dir = *run.presenter.finalize_payload;
  }
  if (fs::exists(run_dir / "deck.pdf")) run.deck_pdf_path = "deck.pdf";
  return run;
}

}  // namespace deckhand::pipeline
