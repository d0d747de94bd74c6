#include "deckhand/synth/sft.hpp"

#include <fstream>

namespace deckhand::synth {

using agent::ContentPart;
using agent::ModelMessage;
using agent::Role;

json to_json(const SftSample& sample) {
  json messages = json::array();
  for (const auto& m : sample.messages) messages.push_back(agent::to_json(m));
  return json{{"messages", messages},
              {"metadata", {{"task_id", sample.task_id}, {"phase", sample.phase}}}};
}

SftSample sft_sample_from_json(const json& j) {
  SftSample sample;
  for (const auto& m : j.at("messages")) sample.messages.push_back(agent::message_from_json(m));
  const json meta = j.value("metadata", json::object());
  sample.task_id = meta.value("task_id", "");
  sample.phase = meta.value("phase", "");
  return sample;
}

namespace {

Result<SftSample> phase_sample(const agent::Trajectory& trajectory,
                               std::vector<ModelMessage> seed) {
  SftSample sample;
  sample.task_id = trajectory.task_id;
  sample.phase = agent::to_string(trajectory.phase);
  sample.messages = std::move(seed);

  for (const auto& step : trajectory.steps) {
    ModelMessage assistant;
    assistant.role = Role::kAssistant;
    if (step.reasoning) assistant.content.push_back(ContentPart::make_text(*step.reasoning));
    assistant.tool_calls.push_back(step.action);
    sample.messages.push_back(std::move(assistant));

    for (const auto& part : step.observation) {
      if (part.kind == ContentPart::Kind::kImage && part.image_bytes.empty())
        return Err("step " + std::to_string(step.index) + " references missing image bytes");
    }
    sample.messages.push_back(ModelMessage::tool_result(step.action.id, step.observation));
  }
  return sample;
}

}  // namespace

Result<std::pair<SftSample, SftSample>> export_sft(const pipeline::PipelineRun& run,
                                                   const prompts::PromptSet& prompts,
                                                   int context_limit) {
  if (!run.researcher.completed() || !run.presenter.completed())
    return Err("only fully completed runs are exportable");

  auto researcher = phase_sample(run.researcher, pipeline::researcher_seed(run.task, prompts));
  if (!researcher) return researcher.error();

  if (!run.researcher.finalize_payload)
    return Err("researcher trajectory lacks a finalize payload");
  const std::string manuscript_rel = *run.researcher.finalize_payload;
  std::ifstream manuscript_in(run.run_dir / manuscript_rel, std::ios::binary);
  if (!manuscript_in) return Err("manuscript missing from run directory: " + manuscript_rel);
  std::string manuscript_text((std::istreambuf_iterator<char>(manuscript_in)),
                              std::istreambuf_iterator<char>());

  auto presenter = phase_sample(
      run.presenter, pipeline::presenter_seed(run.task, manuscript_rel, manuscript_text,
                                              run.preset, prompts, context_limit));
  if (!presenter) return presenter.error();

  return std::make_pair(researcher.take(), presenter.take());
}

Result<void> write_dataset(const std::filesystem::path& path,
                           const std::vector<SftSample>& samples) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return Err("cannot open for writing: " + path.string());
  for (const auto& sample : samples) out << to_json(sample).dump() << "\n";
  if (!out) return Err("write failed: " + path.string());
  return {};
}

Result<std::vector<SftSample>> read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Err("cannot open dataset: " + path.string());
  std::vector<SftSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      return Err("malformed sample at " + path.string() + ":" + std::to_string(line_no));
    samples.push_back(sft_sample_from_json(j));
  }
  return samples;
}

}  // namespace deckhand::synth
