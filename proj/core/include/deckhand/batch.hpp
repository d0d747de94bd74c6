#pragma once

#include <filesystem>
#include <vector>

#include "deckhand/config.hpp"
#include "deckhand/eval/report.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/synth/filter.hpp"
#include "deckhand/synth/sft.hpp"

namespace deckhand::batch {

/// One plain generation run into `<out_dir>/<task_id>/` (no critic).
Result<pipeline::PipelineRun> generate_run(const synth::TaskRecord& task,
                                           const std::filesystem::path& out_dir,
                                           const ClientBundle& clients, const Config& config);

struct SynthesisResult {
  std::vector<pipeline::PipelineRun> runs;  // input task order
  synth::FilterOutcome filter;
  synth::FailureDistribution distribution;
  std::filesystem::path dataset_path;  // empty when nothing passed
  int exported_pairs = 0;
  std::vector<std::string> critic_flags;
};

/// Rollouts with critic injection for every task (bounded parallelism, one
/// workspace per run), then the three-stage filter, then SFT export of the
/// passing runs to `<out_dir>/sft_dataset.jsonl`.
Result<SynthesisResult> synthesize_batch(const std::vector<synth::TaskRecord>& tasks,
                                         const std::filesystem::path& out_dir,
                                         const ClientBundle& clients, const Config& config);

struct EvaluationResult {
  eval::EvalReport report;
  std::vector<std::string> skipped;  // run dirs without a usable deck
};

/// Scores every run directory under `runs_dir`: rule-based constraints, the
/// rubric judge over rendered slides, and corpus diversity via the Vendi
/// ratio over first-slide embeddings.
Result<EvaluationResult> evaluate_runs(const std::filesystem::path& runs_dir,
                                       const ClientBundle& clients, const Config& config);

}  // namespace deckhand::batch
