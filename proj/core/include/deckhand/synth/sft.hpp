#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "deckhand/agent/message.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/prompts.hpp"
#include "deckhand/result.hpp"

namespace deckhand::synth {

/// One trainable sample: the phase's full message sequence (system, user,
/// then alternating assistant tool-call and tool observation turns, images
/// included) plus routing metadata.
struct SftSample {
  std::vector<agent::ModelMessage> messages;
  std::string task_id;
  std::string phase;  // researcher | presenter
};

json to_json(const SftSample& sample);
SftSample sft_sample_from_json(const json& j);

/// Rebuilds both phases of a filtered run as SFT samples. Seeds are
/// reconstructed deterministically from the persisted task and manuscript,
/// so messages reproduce the trajectory step order exactly; injected
/// reflections appear as ordinary assistant thinking calls.
Result<std::pair<SftSample, SftSample>> export_sft(const pipeline::PipelineRun& run,
                                                   const prompts::PromptSet& prompts,
                                                   int context_limit = 50000);

/// Line-oriented dataset file: one sample per line, canonical JSON, so
/// export -> parse -> export is byte-identical.
Result<void> write_dataset(const std::filesystem::path& path,
                           const std::vector<SftSample>& samples);
Result<std::vector<SftSample>> read_dataset(const std::filesystem::path& path);

}  // namespace deckhand::synth
