#include "deckhand/synth/task.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include "deckhand/prompts.hpp"

namespace deckhand::synth {

namespace fs = std::filesystem;

std::string to_string(TaskSource source) {
  switch (source) {
    case TaskSource::kPersonaHub: return "personahub";
    case TaskSource::kArxiv: return "arxiv";
    case TaskSource::kFinePdfs: return "finepdfs";
  }
  return "personahub";
}

TaskSource task_source_from_string(const std::string& s) {
  if (s == "arxiv") return TaskSource::kArxiv;
  if (s == "finepdfs") return TaskSource::kFinePdfs;
  return TaskSource::kPersonaHub;
}

json to_json(const TaskRecord& task) {
  return json{{"id", task.id},
              {"source", to_string(task.source)},
              {"instruction", task.instruction},
              {"constraints", verify::to_json(task.constraints)},
              {"attachments", task.attachments},
              {"split", task.split}};
}

TaskRecord task_from_json(const json& j) {
  TaskRecord t;
  t.id = j.value("id", "");
  t.source = task_source_from_string(j.value("source", "personahub"));
  t.instruction = j.value("instruction", "");
  if (j.contains("constraints"))
    t.constraints = verify::constraint_spec_from_json(j.at("constraints"));
  if (j.contains("attachments"))
    t.attachments = j.at("attachments").get<std::vector<std::string>>();
  t.split = j.value("split", "train");
  return t;
}

Result<std::vector<TaskRecord>> read_tasks(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Err("cannot open task file: " + path.string());
  std::vector<TaskRecord> tasks;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      return Err("malformed task record at " + path.string() + ":" + std::to_string(line_no));
    tasks.push_back(task_from_json(j));
  }
  if (tasks.empty()) return Err("no task records in " + path.string());
  return tasks;
}

Result<void> write_tasks(const fs::path& path, const std::vector<TaskRecord>& tasks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return Err("cannot open for writing: " + path.string());
  for (const auto& t : tasks) out << to_json(t).dump() << "\n";
  return {};
}

namespace {

// Platform-stable uniform double in [0, 1): raw engine draws only, since the
// standard distributions differ across library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

int pick(std::mt19937_64& rng, const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  double x = next_unit(rng) * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (x < weights[i] || i + 1 == weights.size()) return static_cast<int>(i);
    x -= weights[i];
  }
  return 0;
}

std::string constraint_hint(const verify::ConstraintSpec& c) {
  const bool zh = c.language && *c.language == inspect::Language::kChinese;
  std::vector<std::string> parts;
  if (c.language) {
    parts.push_back(zh ? std::string("使用中文") : std::string("use English"));
  }
  if (c.slide_count) {
    char buf[96];
    if (zh)
      std::snprintf(buf, sizeof(buf), "幻灯片数量在%d到%d页之间", c.slide_count->lo,
                    c.slide_count->hi);
    else
      std::snprintf(buf, sizeof(buf), "between %d and %d slides", c.slide_count->lo,
                    c.slide_count->hi);
    parts.push_back(buf);
  }
  if (c.aspect) {
    std::string aspect_text;
    if (*c.aspect == "widescreen_16_9") aspect_text = zh ? "16:9宽屏" : "16:9 widescreen";
    else if (*c.aspect == "standard_4_3") aspect_text = zh ? "4:3标准" : "4:3 standard";
    else aspect_text = zh ? "A1海报" : "A1 poster";
    parts.push_back(zh ? ("使用" + aspect_text + "版式") : (aspect_text + " format"));
  }
  if (parts.empty()) return zh ? "没有附加格式要求。" : "No additional format requirements.";
  std::string joined;
  for (const auto& p : parts) joined += (joined.empty() ? "" : zh ? "；" : "; ") + p;
  return (zh ? "要求：" : "Requirements: ") + joined + (zh ? "。" : ".");
}

}  // namespace

BuildOutcome build_tasks(const std::vector<SeedDescriptor>& descriptors, std::uint64_t rng_seed,
                         const BuildOptions& options) {
  BuildOutcome outcome;
  const prompts::PromptSet prompt_set;
  std::mt19937_64 rng(rng_seed);
  const auto& m = options.marginals;

  int index = 0;
  for (const auto& seed : descriptors) {
    // Every task consumes the same number of draws whether or not it is
    // emitted, keeping task synthesis stable under descriptor edits.
    verify::ConstraintSpec constraints;
    const bool english = next_unit(rng) < m.language_english;
    constraints.language = english ? inspect::Language::kEnglish : inspect::Language::kChinese;

    const int aspect = pick(rng, {m.aspect_free, m.aspect_widescreen, m.aspect_standard,
                                  m.aspect_poster});
    if (aspect == 1) constraints.aspect = "widescreen_16_9";
    else if (aspect == 2) constraints.aspect = "standard_4_3";
    else if (aspect == 3) constraints.aspect = "poster_a1";

    const int count = pick(rng, {m.count_free, m.count_low, m.count_high});
    if (count == 1) constraints.slide_count = verify::SlideCountRange{1, 10};
    else if (count == 2) constraints.slide_count = verify::SlideCountRange{11, 20};

    const bool eval_split = next_unit(rng) < options.eval_fraction;

    if (seed.source != TaskSource::kPersonaHub) {
      std::error_code ec;
      const bool readable = !seed.document_path.empty() &&
                            fs::exists(seed.document_path, ec) &&
                            fs::is_regular_file(seed.document_path, ec);
      if (!readable) {
        outcome.warnings.push_back("skipped " + to_string(seed.source) +
                                   " descriptor: unreadable attachment '" + seed.document_path +
                                   "'");
        ++index;
        continue;
      }
    }

    TaskRecord task;
    char id[32];
    std::snprintf(id, sizeof(id), "task_%04d", index);
    task.id = id;
    task.source = seed.source;
    task.constraints = constraints;
    task.split = eval_split ? "eval" : "train";

    const std::string hint = constraint_hint(constraints);
    if (seed.source == TaskSource::kPersonaHub) {
      const std::string& tmpl = seed.topic_hint.empty()
                                    ? prompt_set.get("persona_query")
                                    : prompt_set.get("persona_query_detail");
      task.instruction = prompts::fill(
          tmpl, {{"hint", hint}, {"persona", seed.persona}, {"synthesized_text", seed.topic_hint}});
    } else {
      const bool zh = !english;
      task.instruction =
          (zh ? std::string("请根据附件制作一个演示文稿。") :
                std::string("Create a presentation based on the attachment.")) +
          "\n" + hint + "\n" + (zh ? "附件：" : "Attachment: ") + seed.document_path;
      task.attachments.push_back(seed.document_path);
    }

    outcome.tasks.push_back(std::move(task));
    ++index;
  }
  return outcome;
}

}  // namespace deckhand::synth
