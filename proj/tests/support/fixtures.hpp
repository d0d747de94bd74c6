#pragma once

// Shared fixture machinery: temp directories, slide/deck builders, and
// scripted pipeline runs.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "deckhand/config.hpp"
#include "deckhand/inspect/render.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/stub/stub_clients.hpp"
#include "deckhand/synth/task.hpp"

namespace fixtures {

namespace fs = std::filesystem;

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("deckhand_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

/// Slide page with a solid background and some body text.
inline std::string slide_html(const std::string& css_color, const std::string& text, int width_px,
                              int height_px) {
  return "<!DOCTYPE html>\n<html><head><style>\nhtml, body { margin: 0; width: " +
         std::to_string(width_px) + "px; height: " + std::to_string(height_px) +
         "px; overflow: hidden; background: " + css_color +
         "; }\n</style></head>\n<body><p>" + text + "</p></body></html>\n";
}

inline std::string english_filler(int i) {
  return "Slide " + std::to_string(i) +
         ": renewable energy systems keep improving as storage costs decline.";
}

inline std::string chinese_filler(int i) {
  return "第" + std::to_string(i) + "页：可再生能源的发展趋势与成本下降带来新的市场机会。";
}

/// Renders `pages` slides of `color` and `language` text at `preset` into a
/// deck PDF at `out_pdf`.
inline deckhand::Result<fs::path> build_deck(const fs::path& dir, int pages,
                                             const std::string& color, bool chinese,
                                             const deckhand::inspect::AspectPreset& preset,
                                             const fs::path& out_pdf) {
  const fs::path slides = dir / "slides";
  fs::create_directories(slides);
  for (int i = 1; i <= pages; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "slide_%03d.html", i);
    write_file(slides / name, slide_html(color, chinese ? chinese_filler(i) : english_filler(i),
                                         preset.width_px, preset.height_px));
  }
  deckhand::inspect::BuiltinRenderer renderer;
  return deckhand::pipeline::assemble_pdf(slides, preset, renderer, out_pdf);
}

inline deckhand::synth::TaskRecord make_task(const std::string& id,
                                             const std::string& instruction,
                                             deckhand::verify::ConstraintSpec constraints) {
  deckhand::synth::TaskRecord task;
  task.id = id;
  task.source = deckhand::synth::TaskSource::kPersonaHub;
  task.instruction = instruction;
  task.constraints = std::move(constraints);
  return task;
}

inline deckhand::Config stub_config(const fs::path& workspace_root) {
  deckhand::Config config;
  config.stub_mode = true;
  config.workspace_root = workspace_root.string();
  return config;
}

/// A full stub-planner pipeline run for `task` under `run_dir`.
inline deckhand::Result<deckhand::pipeline::PipelineRun> stub_run(
    const deckhand::synth::TaskRecord& task, const fs::path& run_dir) {
  auto clients = deckhand::build_clients(stub_config(run_dir));
  if (!clients) return clients.error();
  deckhand::pipeline::PipelineEnv env;
  env.researcher_model = clients.value().generation.get();
  env.presenter_model = clients.value().generation.get();
  env.helper_model = clients.value().generation.get();
  env.provider = clients.value().provider.get();
  env.renderer = clients.value().renderer.get();
  env.prompts = &clients.value().prompts;
  return deckhand::pipeline::run_pipeline(task, run_dir, env);
}

}  // namespace fixtures
