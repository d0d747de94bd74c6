#include "deckhand/config.hpp"

#include "deckhand/agent/http_model_client.hpp"
#include "deckhand/stub/stub_clients.hpp"

namespace deckhand {

Result<void> Config::validate() const {
  if (context_limit <= 0) return Err("context_limit must be positive");
  if (concurrency < 1) return Err("concurrency must be >= 1");
  if (max_steps < 1) return Err("max_steps must be >= 1");
  if (!stub_mode && generation.base_url.empty())
    return Err("generation endpoint is not configured (set --stub for the offline mode)");
  if (!inspect::preset_by_name(default_preset))
    return Err("unknown aspect preset: " + default_preset);
  return {};
}

namespace {

std::shared_ptr<agent::ModelClient> http_client(const EndpointConfig& endpoint) {
  agent::HttpModelConfig cfg;
  cfg.base_url = endpoint.base_url;
  cfg.model = endpoint.model;
  cfg.api_key_env = endpoint.api_key_env;
  return std::make_shared<agent::HttpModelClient>(cfg);
}

}  // namespace

Result<ClientBundle> build_clients(const Config& config) {
  if (auto valid = config.validate(); !valid) return valid.error();

  ClientBundle bundle;
  if (!config.prompt_dir.empty()) bundle.prompts.load_overrides(config.prompt_dir);

  std::shared_ptr<inspect::RendererClient> raw_renderer;
  if (config.renderer.binary_path.empty()) {
    raw_renderer = std::make_shared<inspect::BuiltinRenderer>();
  } else {
    inspect::BrowserRendererConfig rc;
    rc.binary_path = config.renderer.binary_path;
    rc.timeout_ms = config.renderer.timeout_ms;
    raw_renderer = std::make_shared<inspect::BrowserRenderer>(rc);
  }
  bundle.renderer =
      std::make_shared<inspect::RendererPool>(raw_renderer, config.renderer.pool_size);

  if (config.stub_mode) {
    bundle.generation = std::make_shared<stub::PlannerModelClient>();
    bundle.critic = std::make_shared<stub::CleanCriticClient>();
    bundle.consistency_judge = std::make_shared<stub::PassJudgeClient>();
    bundle.quality_judge = std::make_shared<stub::PassJudgeClient>();
    bundle.rubric_judge = std::make_shared<stub::ScoringJudgeClient>();
    bundle.provider = std::make_shared<tools::StubProvider>(config.fixture_dir);
    bundle.features = std::make_shared<eval::HistogramFeatureClient>();
    return bundle;
  }

  bundle.generation = http_client(config.generation);
  bundle.critic = config.critic.base_url.empty() ? bundle.generation : http_client(config.critic);
  bundle.consistency_judge = config.consistency_judge.base_url.empty()
                                 ? bundle.generation
                                 : http_client(config.consistency_judge);
  bundle.quality_judge =
      config.quality_judge.base_url.empty() ? bundle.generation : http_client(config.quality_judge);
  bundle.rubric_judge = bundle.quality_judge;

  if (config.feature_extractor.base_url.empty()) {
    bundle.features = std::make_shared<eval::HistogramFeatureClient>();
  } else {
    eval::HttpFeatureConfig fc;
    fc.base_url = config.feature_extractor.base_url;
    fc.api_key_env = config.feature_extractor.api_key_env;
    bundle.features = std::make_shared<eval::HttpFeatureClient>(fc);
  }

  if (!config.tool_provider.base_url.empty()) {
    tools::HttpProviderConfig pc;
    pc.base_url = config.tool_provider.base_url;
    pc.api_key_env = config.tool_provider.api_key_env;
    bundle.provider = std::make_shared<tools::HttpProvider>(pc);
  } else {
    // Retrieval stays on the deterministic stub until a provider is wired in.
    bundle.provider = std::make_shared<tools::StubProvider>(config.fixture_dir);
  }
  return bundle;
}

}  // namespace deckhand
