#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "deckhand/agent/model_client.hpp"
#include "deckhand/eval/features.hpp"
#include "deckhand/inspect/render.hpp"
#include "deckhand/prompts.hpp"
#include "deckhand/result.hpp"
#include "deckhand/tools/providers.hpp"
#include "deckhand/tools/workspace.hpp"

namespace deckhand {

struct EndpointConfig {
  std::string base_url;
  std::string model;
  std::string api_key_env;  // credentials never live in the config file
};

struct RendererConfig {
  std::string binary_path;  // empty selects the built-in rasterizer
  int pool_size = 2;
  int timeout_ms = 15000;
};

struct Config {
  EndpointConfig generation;
  EndpointConfig critic;
  EndpointConfig consistency_judge;
  EndpointConfig quality_judge;
  EndpointConfig feature_extractor;
  EndpointConfig tool_provider;  // search/fetch/image-generation backend
  RendererConfig renderer;
  std::string workspace_root = "runs";
  std::string prompt_dir;   // empty keeps the embedded prompt defaults
  std::string fixture_dir;  // stub provider canned responses
  int context_limit = 50000;
  int max_steps = 60;
  int concurrency = 1;
  bool stub_mode = false;
  std::uint64_t seed = 0;
  std::string default_preset = "widescreen_16_9";  // for tasks with a free aspect
  tools::SandboxPolicy sandbox;

  Result<void> validate() const;
};

/// Every pluggable backend, wired per the config. Stub mode binds the
/// deterministic in-process clients and opens no sockets at all.
struct ClientBundle {
  std::shared_ptr<agent::ModelClient> generation;
  std::shared_ptr<agent::ModelClient> critic;
  std::shared_ptr<agent::ModelClient> consistency_judge;
  std::shared_ptr<agent::ModelClient> quality_judge;
  std::shared_ptr<agent::ModelClient> rubric_judge;
  std::shared_ptr<tools::Provider> provider;
  std::shared_ptr<inspect::RendererClient> renderer;  // pool-bounded
  std::shared_ptr<eval::FeatureClient> features;
  prompts::PromptSet prompts;
};

Result<ClientBundle> build_clients(const Config& config);

}  // namespace deckhand
