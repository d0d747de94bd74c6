#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "deckhand/result.hpp"
#include "deckhand/verify/constraint.hpp"

namespace deckhand::synth {

using json = nlohmann::json;

enum class TaskSource { kPersonaHub, kArxiv, kFinePdfs };

std::string to_string(TaskSource source);
TaskSource task_source_from_string(const std::string& s);

/// One presentation request: instruction text plus its verifiable constraints.
/// Document-backed sources carry at least one attachment; persona tasks none.
struct TaskRecord {
  std::string id;
  TaskSource source = TaskSource::kPersonaHub;
  std::string instruction;
  verify::ConstraintSpec constraints;
  std::vector<std::string> attachments;  // workspace-relative paths
  std::string split = "train";           // train | eval
};

json to_json(const TaskRecord& task);
TaskRecord task_from_json(const json& j);

Result<std::vector<TaskRecord>> read_tasks(const std::filesystem::path& path);
Result<void> write_tasks(const std::filesystem::path& path, const std::vector<TaskRecord>& tasks);

/// Raw material a task is built from.
struct SeedDescriptor {
  TaskSource source = TaskSource::kPersonaHub;
  std::string persona;                  // persona sources
  std::string document_path;            // document sources
  std::string topic_hint;               // optional synthesized topic
};

/// Sampling marginals for constraint augmentation; defaults approximate the
/// observed task mix (aspect free ~43%, slide-count free ~51%).
struct ConstraintMarginals {
  double aspect_free = 0.43;
  double aspect_widescreen = 0.28;
  double aspect_standard = 0.26;
  double aspect_poster = 0.03;
  double count_free = 0.51;
  double count_low = 0.28;   // 1-10 slides
  double count_high = 0.21;  // 11-20 slides
  double language_english = 0.52;
};

struct BuildOptions {
  ConstraintMarginals marginals;
  double eval_fraction = 0.0;
};

struct BuildOutcome {
  std::vector<TaskRecord> tasks;
  std::vector<std::string> warnings;  // skipped descriptors and why
};

/// Deterministically expands seed descriptors into constrained tasks. The
/// same descriptors and seed always produce byte-identical records.
BuildOutcome build_tasks(const std::vector<SeedDescriptor>& descriptors, std::uint64_t rng_seed,
                         const BuildOptions& options = {});

}  // namespace deckhand::synth
