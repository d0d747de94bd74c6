#include "deckhand/agent/loop.hpp"

namespace deckhand::agent {

namespace {

Result<ModelResponse> complete_with_retries(ModelClient& model,
                                            const std::vector<ModelMessage>& messages,
                                            const json& tools, int retries) {
  Result<ModelResponse> last = Err("model client not invoked");
  for (int attempt = 0; attempt <= retries; ++attempt) {
    last = model.complete(messages, tools);
    if (last) return last;
  }
  return last;
}

}  // namespace

Trajectory run_agent_loop(const AgentProfile& profile, std::vector<ModelMessage> seed_messages,
                          const tools::ToolRegistry& registry, ModelClient& model,
                          ContextBudget& budget, tools::ToolContext& ctx,
                          const LoopOptions& options) {
  Trajectory trajectory;
  trajectory.phase =
      profile.role == tools::AgentRole::kResearcher ? Phase::kResearcher : Phase::kPresenter;
  trajectory.status = TrajectoryStatus::kFailedMaxSteps;

  // Collect produced paths locally; ctx keeps its original collector after we
  // return, so a reused context never points into the returned trajectory.
  std::vector<std::string>* caller_collector = ctx.artifacts;
  std::vector<std::string> produced;
  ctx.artifacts = &produced;

  std::vector<ModelMessage> messages = std::move(seed_messages);
  const json manifest = registry.manifest();
  int finalize_failures = 0;
  int synthetic_call_id = 0;
  int injected_call_id = 0;

  for (int dispatches = 0; dispatches < options.max_steps; ++dispatches) {
    auto response = complete_with_retries(model, messages, manifest, options.transport_retries);
    if (!response) {
      trajectory.status = TrajectoryStatus::kFailedEnvironment;
      break;
    }
    ModelResponse reply = response.take();

    ModelMessage assistant;
    assistant.role = Role::kAssistant;
    if (!reply.text.empty()) assistant.content.push_back(ContentPart::make_text(reply.text));
    for (auto& call : reply.tool_calls) {
      if (call.id.empty()) call.id = "call_auto_" + std::to_string(synthetic_call_id++);
    }
    assistant.tool_calls = reply.tool_calls;
    messages.push_back(assistant);

    const int new_used = estimate_tokens(messages, reply.usage_total_tokens);
    const auto warnings = check_budget(budget, new_used);

    bool phase_done = false;
    bool phase_failed = false;

    if (reply.tool_calls.empty()) {
      messages.push_back(ModelMessage::text(
          Role::kUser, "Respond with a tool call; plain replies are not actionable. "
                       "Call finalize when the deliverable is ready."));
    }

    for (std::size_t i = 0; i < reply.tool_calls.size() && !phase_done && !phase_failed; ++i) {
      const ToolCall& call = reply.tool_calls[i];
      tools::Observation observation;
      std::optional<InjectedReflection> injection;

      if (call.name == "finalize") {
        std::string payload;
        if (call.arguments.is_object() && call.arguments.contains("path") &&
            call.arguments.at("path").is_string()) {
          payload = call.arguments.at("path").get<std::string>();
        }
        Result<std::string> verdict = Err("finalize requires a 'path' argument");
        if (!payload.empty()) {
          verdict = options.finalize ? options.finalize(payload)
                                     : Result<std::string>(std::string("Phase finalized."));
        }
        if (verdict) {
          observation = tools::Observation::text(verdict.value());
          trajectory.finalize_payload = payload;
          phase_done = true;
        } else {
          observation = tools::Observation::error(verdict.error().message);
          if (++finalize_failures > options.finalize_corrections) phase_failed = true;
        }
      } else {
        observation = tools::dispatch(registry, call, ctx);
        if (options.reflection &&
            (call.name == "inspect_slide" || call.name == "inspect_manuscript") &&
            !observation.is_error) {
          injection = options.reflection(call, observation);
        }
      }

      TrajectoryStep step;
      step.index = static_cast<int>(trajectory.steps.size());
      if (i == 0 && !reply.text.empty()) step.reasoning = reply.text;
      step.action = call;
      step.observation = observation.parts;
      step.tokens_used_after = budget.used_tokens;
      trajectory.steps.push_back(step);
      messages.push_back(ModelMessage::tool_result(call.id, observation.parts));

      if (injection) {
        // The critic's trace joins the context as a thinking turn of the
        // agent's own, so the next model call sees it as prior reasoning.
        ToolCall think;
        think.id = "inject_" + std::to_string(injected_call_id++);
        think.name = "thinking";
        think.arguments = json{{"thought", injection->thought}};
        ModelMessage injected_assistant;
        injected_assistant.role = Role::kAssistant;
        injected_assistant.tool_calls.push_back(think);
        messages.push_back(injected_assistant);
        tools::Observation ack = tools::Observation::text("Thought recorded.");
        messages.push_back(ModelMessage::tool_result(think.id, ack.parts));

        TrajectoryStep injected_step;
        injected_step.index = static_cast<int>(trajectory.steps.size());
        injected_step.action = think;
        injected_step.observation = ack.parts;
        injected_step.tokens_used_after = budget.used_tokens;
        injected_step.injected = true;
        trajectory.steps.push_back(injected_step);
      }
    }

    if (phase_done) {
      trajectory.status = TrajectoryStatus::kCompleted;
      break;
    }
    if (phase_failed) {
      trajectory.status = TrajectoryStatus::kFailedEnvironment;
      break;
    }

    for (const auto warning : warnings) {
      messages.push_back(ModelMessage::text(Role::kUser, warning_text(warning)));
    }
    if (budget.exhausted()) {
      trajectory.status = TrajectoryStatus::kFailedBudget;
      break;
    }
  }

  if (caller_collector != nullptr)
    caller_collector->insert(caller_collector->end(), produced.begin(), produced.end());
  ctx.artifacts = caller_collector;
  trajectory.artifacts = std::move(produced);
  return trajectory;
}

}  // namespace deckhand::agent
