#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "deckhand/agent/loop.hpp"
#include "deckhand/agent/trajectory.hpp"
#include "deckhand/inspect/preset.hpp"
#include "deckhand/inspect/render.hpp"
#include "deckhand/prompts.hpp"
#include "deckhand/synth/task.hpp"
#include "deckhand/tools/providers.hpp"
#include "deckhand/tools/workspace.hpp"

namespace deckhand::pipeline {

/// The validated researcher deliverable passed through the workspace.
struct Handoff {
  std::string manuscript_path;  // workspace-relative
};

struct FinalizeRecord {
  tools::AgentRole role;
  std::string path;                       // validated payload
  std::vector<std::string> slide_files;   // presenter: sorted file names
};

/// Validates a finalize payload: the researcher hands off a readable markdown
/// file that passes manuscript inspection; the presenter hands off a
/// directory holding at least one HTML slide.
Result<FinalizeRecord> handle_finalize(tools::AgentRole role, const std::string& payload_path,
                                       const tools::Workspace& workspace);

/// Renders every slide_*.html under `slides_dir` (sorted by name, non-HTML
/// entries ignored) and concatenates the pages into one PDF at `out_pdf`.
Result<std::filesystem::path> assemble_pdf(const std::filesystem::path& slides_dir,
                                           const inspect::AspectPreset& preset,
                                           inspect::RendererClient& renderer,
                                           const std::filesystem::path& out_pdf);

/// Builds a reflection hook bound to one run's workspace; synthesis mode only.
using ReflectionFactory =
    std::function<agent::ReflectionHook(const tools::Workspace&, tools::AgentRole)>;

struct PipelineEnv {
  agent::ModelClient* researcher_model = nullptr;
  agent::ModelClient* presenter_model = nullptr;
  agent::ModelClient* helper_model = nullptr;
  tools::Provider* provider = nullptr;
  inspect::RendererClient* renderer = nullptr;
  const prompts::PromptSet* prompts = nullptr;
  ReflectionFactory reflection_factory;  // empty outside synthesis mode
  int context_limit = 50000;
  int max_steps = 60;
  tools::SandboxPolicy sandbox;
  inspect::AspectPreset default_preset = inspect::widescreen_16_9();  // for Free tasks
};

struct PipelineRun {
  std::string task_id;
  synth::TaskRecord task;
  agent::Trajectory researcher;
  agent::Trajectory presenter;
  bool presenter_ran = false;
  std::string slides_dir;      // workspace-relative; empty until presenter finalizes
  std::string deck_pdf_path;   // workspace-relative; empty when assembly did not happen
  std::string assembly_error;  // non-empty when PDF assembly failed
  inspect::AspectPreset preset;
  std::filesystem::path run_dir;

  bool completed() const {
    return researcher.completed() && presenter.completed() && !deck_pdf_path.empty();
  }
};

/// Seed messages for each phase. Deterministic, so trajectories can be
/// re-exported from a persisted run directory.
std::vector<agent::ModelMessage> researcher_seed(const synth::TaskRecord& task,
                                                 const prompts::PromptSet& prompts);
std::vector<agent::ModelMessage> presenter_seed(const synth::TaskRecord& task,
                                                const std::string& manuscript_rel,
                                                const std::string& manuscript_text,
                                                const inspect::AspectPreset& preset,
                                                const prompts::PromptSet& prompts,
                                                int context_limit);

/// Resolved aspect preset for a task: its constraint if present, else the
/// fallback (16:9 by default).
inspect::AspectPreset resolve_preset(const synth::TaskRecord& task);
inspect::AspectPreset resolve_preset(const synth::TaskRecord& task,
                                     const inspect::AspectPreset& fallback);

/// Runs researcher then presenter over a fresh run directory, assembling the
/// deck PDF on success. Phase failures land in the returned run's trajectory
/// statuses; only setup problems produce errors.
Result<PipelineRun> run_pipeline(const synth::TaskRecord& task,
                                 const std::filesystem::path& run_dir, const PipelineEnv& env);

/// Reloads a persisted run directory (task.json + trajectories + artifacts).
Result<PipelineRun> load_run(const std::filesystem::path& run_dir);

}  // namespace deckhand::pipeline
