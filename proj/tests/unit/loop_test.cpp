#include <doctest.h>

#include "../support/fixtures.hpp"
#include "deckhand/agent/loop.hpp"
#include "deckhand/tools/tool_spec.hpp"

using namespace deckhand;
using agent::ModelResponse;
using agent::ScriptedModelClient;

namespace {

struct LoopHarness {
  fixtures::TempDir dir{"loop"};
  tools::Workspace workspace{dir.path()};
  tools::StubProvider provider{};
  inspect::BuiltinRenderer renderer;
  tools::ToolRegistry registry = tools::build_registry(tools::AgentRole::kResearcher);
  agent::AgentProfile profile;
  agent::ContextBudget budget;
  tools::ToolContext ctx;

  LoopHarness() {
    profile.role = tools::AgentRole::kResearcher;
    profile.system_prompt = "system";
    ctx.workspace = &workspace;
    ctx.provider = &provider;
    ctx.renderer = &renderer;
  }

  std::vector<agent::ModelMessage> seed() {
    return {agent::ModelMessage::text(agent::Role::kSystem, profile.system_prompt),
            agent::ModelMessage::text(agent::Role::kUser, "do the task")};
  }

  agent::LoopOptions options(int max_steps = 10) {
    agent::LoopOptions opts;
    opts.max_steps = max_steps;
    opts.finalize = [this](const std::string& payload) -> Result<std::string> {
      auto abs = workspace.resolve(payload);
      if (!abs || !std::filesystem::exists(abs.value()))
        return Err("finalize payload does not exist: " + payload);
      return std::string("accepted " + payload);
    };
    return opts;
  }
};

}  // namespace

TEST_SUITE("agent_loop") {
  TEST_CASE("immediate finalize with a valid path completes in one step") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "out.md", "# done");
    ScriptedModelClient model;
    model.push_call("finalize", {{"path", "out.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].action.name == "finalize");
    CHECK(t.finalize_payload == "out.md");
  }

  TEST_CASE("five-action transcript yields five indexed steps with monotone tokens") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_call("thinking", {{"thought", "plan"}});
    model.push_call("write_file", {{"path", "a.txt"}, {"content", "alpha"}});
    model.push_call("read_file", {{"path", "a.txt"}});
    model.push_call("list_directory", nlohmann::json::object());
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    REQUIRE(t.steps.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(t.steps[static_cast<std::size_t>(i)].index == i);
    for (std::size_t i = 1; i < t.steps.size(); ++i)
      CHECK(t.steps[i].tokens_used_after >= t.steps[i - 1].tokens_used_after);
    CHECK(t.steps.back().action.name == "finalize");
  }

  TEST_CASE("never finalizing hits the step bound") {
    LoopHarness h;
    ScriptedModelClient model;
    for (int i = 0; i < 5; ++i) model.push_call("thinking", {{"thought", "loop"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options(3));
    CHECK(t.status == agent::TrajectoryStatus::kFailedMaxSteps);
    CHECK(t.steps.size() == 3);
  }

  TEST_CASE("transport failure after the retry budget fails the environment") {
    LoopHarness h;
    ScriptedModelClient model;
    model.push_error("boom 1");
    model.push_error("boom 2");
    model.push_error("boom 3");
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kFailedEnvironment);
    CHECK(t.steps.empty());
    CHECK(model.requests().size() == 3);  // initial try + 2 retries
  }

  TEST_CASE("one transient failure is retried through") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_error("transient");
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
  }

  TEST_CASE("malformed tool arguments become error observations, not crashes") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_call("write_file", {{"path", "x.txt"}});  // content missing
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    REQUIRE(t.steps.size() == 2);
    const std::string obs = t.steps[0].observation[0].text;
    CHECK(obs.find("error") != std::string::npos);
    CHECK(obs.find("content") != std::string::npos);
  }

  TEST_CASE("budget exhaustion fails the phase after warnings") {
    LoopHarness h;
    ScriptedModelClient model;
    model.push_call("thinking", {{"thought", "a"}}, 26000);
    model.push_call("thinking", {{"thought", "b"}}, 41000);
    model.push_call("thinking", {{"thought", "c"}}, 50000);
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kFailedBudget);
    CHECK(t.steps.size() == 3);
    CHECK(h.budget.warn50_fired);
    CHECK(h.budget.warn80_fired);
  }

  TEST_CASE("warning messages are appended exactly when thresholds are crossed") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_call("thinking", {{"thought", "a"}}, 26000);
    model.push_call("thinking", {{"thought", "b"}}, 27000);
    model.push_call("thinking", {{"thought", "c"}}, 41000);
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);

    // The scripted client records the conversation; count warning texts.
    const auto& final_messages = model.requests().back().messages;
    int warn50 = 0, warn80 = 0;
    for (const auto& m : final_messages) {
      const std::string text = m.joined_text();
      if (text.find("50% of the context window") != std::string::npos) ++warn50;
      if (text.find("80% of the context window") != std::string::npos) ++warn80;
    }
    CHECK(warn50 == 1);
    CHECK(warn80 == 1);
  }

  TEST_CASE("text-only replies draw a nudge and cost a dispatch") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_text("Let me think about this in prose.");
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    CHECK(t.steps.size() == 1);
    const auto& final_messages = model.requests().back().messages;
    bool nudged = false;
    for (const auto& m : final_messages) {
      if (m.joined_text().find("Respond with a tool call") != std::string::npos) nudged = true;
    }
    CHECK(nudged);
  }

  TEST_CASE("finalize corrections are bounded") {
    LoopHarness h;
    ScriptedModelClient model;
    for (int i = 0; i < 4; ++i) model.push_call("finalize", {{"path", "missing.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kFailedEnvironment);
    CHECK(t.steps.size() == 3);  // initial attempt + 2 corrections
  }

  TEST_CASE("a correction within the bound still completes") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_call("finalize", {{"path", "missing.md"}});
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    CHECK(t.steps.size() == 2);
  }

  TEST_CASE("identical scripted runs serialize byte-identically") {
    auto run_once = [](const std::filesystem::path& root) {
      tools::Workspace workspace(root);
      tools::StubProvider provider;
      inspect::BuiltinRenderer renderer;
      tools::ToolContext ctx;
      ctx.workspace = &workspace;
      ctx.provider = &provider;
      ctx.renderer = &renderer;
      agent::AgentProfile profile;
      profile.role = tools::AgentRole::kResearcher;
      agent::ContextBudget budget;
      ScriptedModelClient model;
      model.push_call("write_file", {{"path", "m.md"}, {"content", "# fixture"}});
      model.push_call("search_web", {{"query", "solar microgrids"}});
      model.push_call("finalize", {{"path", "m.md"}});
      agent::LoopOptions opts;
      opts.finalize = [](const std::string&) -> Result<std::string> {
        return std::string("ok");
      };
      auto t = agent::run_agent_loop(
          profile,
          {agent::ModelMessage::text(agent::Role::kSystem, "s"),
           agent::ModelMessage::text(agent::Role::kUser, "u")},
          tools::build_registry(tools::AgentRole::kResearcher), model, budget, ctx, opts);
      t.task_id = "fixed";
      return agent::to_jsonl_record(t);
    };
    fixtures::TempDir a{"det_a"}, b{"det_b"};
    CHECK(run_once(a.path()) == run_once(b.path()));
  }

  TEST_CASE("parallel tool calls in one reply become ordered steps") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    agent::ModelResponse twin;
    twin.text = "writing both files";
    agent::ToolCall first;
    first.id = "p1";
    first.name = "write_file";
    first.arguments = {{"path", "a.txt"}, {"content", "A"}};
    agent::ToolCall second;
    second.id = "p2";
    second.name = "write_file";
    second.arguments = {{"path", "b.txt"}, {"content", "B"}};
    twin.tool_calls = {first, second};
    model.push(twin);
    model.push_call("finalize", {{"path", "m.md"}});

    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    REQUIRE(t.status == agent::TrajectoryStatus::kCompleted);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].action.id == "p1");
    CHECK(t.steps[1].action.id == "p2");
    CHECK(t.steps[0].reasoning.has_value());
    CHECK_FALSE(t.steps[1].reasoning.has_value());  // the reply text belongs to the first step
    CHECK(std::filesystem::exists(h.dir.path() / "a.txt"));
    CHECK(std::filesystem::exists(h.dir.path() / "b.txt"));

    // The final request shows assistant(two calls) then two tool replies.
    const auto& messages = model.requests().back().messages;
    bool found_pair = false;
    for (std::size_t i = 0; i + 2 < messages.size(); ++i) {
      if (messages[i].role == agent::Role::kAssistant && messages[i].tool_calls.size() == 2) {
        found_pair = messages[i + 1].role == agent::Role::kTool &&
                     *messages[i + 1].tool_call_id == "p1" &&
                     messages[i + 2].role == agent::Role::kTool &&
                     *messages[i + 2].tool_call_id == "p2";
      }
    }
    CHECK(found_pair);
  }

  TEST_CASE("a successful finalize ignores trailing calls in the same reply") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    agent::ModelResponse mixed;
    agent::ToolCall fin;
    fin.id = "f";
    fin.name = "finalize";
    fin.arguments = {{"path", "m.md"}};
    agent::ToolCall extra;
    extra.id = "x";
    extra.name = "write_file";
    extra.arguments = {{"path", "late.txt"}, {"content", "never"}};
    mixed.tool_calls = {fin, extra};
    model.push(mixed);
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    CHECK(t.status == agent::TrajectoryStatus::kCompleted);
    CHECK(t.steps.size() == 1);
    CHECK_FALSE(std::filesystem::exists(h.dir.path() / "late.txt"));
  }

  TEST_CASE("completed status implies the last action is finalize") {
    LoopHarness h;
    fixtures::write_file(h.dir.path() / "m.md", "# m");
    ScriptedModelClient model;
    model.push_call("thinking", {{"thought", "t"}});
    model.push_call("finalize", {{"path", "m.md"}});
    const auto t = agent::run_agent_loop(h.profile, h.seed(), h.registry, model, h.budget, h.ctx,
                                         h.options());
    REQUIRE(t.status == agent::TrajectoryStatus::kCompleted);
    CHECK(t.steps.back().action.name == "finalize");
  }
}
