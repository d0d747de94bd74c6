#include <doctest.h>

#include "../support/fixtures.hpp"
#include "deckhand/tools/dispatch.hpp"
#include "deckhand/util/process.hpp"

using namespace deckhand;
using agent::ToolCall;

namespace {

tools::Observation run_command(tools::Workspace& ws, const std::string& cmdline) {
  tools::StubProvider provider;
  tools::ToolContext ctx;
  ctx.workspace = &ws;
  ctx.provider = &provider;
  ToolCall c;
  c.id = "x";
  c.name = "execute_command";
  c.arguments = {{"command", cmdline}};
  return tools::dispatch(tools::build_registry(tools::AgentRole::kResearcher), c, ctx);
}

}  // namespace

TEST_SUITE("execute_command") {
  TEST_CASE("ls lists the workspace files with exit 0") {
    fixtures::TempDir dir{"exec"};
    fixtures::write_file(dir.path() / "one.txt", "1");
    fixtures::write_file(dir.path() / "two.txt", "2");
    tools::Workspace ws(dir.path());
    const auto obs = run_command(ws, "ls");
    CHECK_FALSE(obs.is_error);
    const std::string text = obs.joined_text();
    CHECK(text.find("exit 0") != std::string::npos);
    CHECK(text.find("one.txt") != std::string::npos);
    CHECK(text.find("two.txt") != std::string::npos);
  }

  TEST_CASE("commands off the allowlist are rejected without spawning") {
    fixtures::TempDir dir{"exec"};
    tools::Workspace ws(dir.path());
    const auto obs = run_command(ws, "rm -rf /");
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("not allowlisted") != std::string::npos);
  }

  TEST_CASE("timeouts kill the child and flag the observation") {
    fixtures::TempDir dir{"exec"};
    tools::SandboxPolicy policy;
    policy.command_allowlist = {"sleep"};
    policy.command_timeout_ms = 300;
    tools::Workspace ws(dir.path(), policy);
    const auto obs = run_command(ws, "sleep 60");
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("timed out") != std::string::npos);
  }

  TEST_CASE("output beyond the cap is truncated and flagged") {
    fixtures::TempDir dir{"exec"};
    fixtures::write_file(dir.path() / "big.txt", std::string(8192, 'y'));
    tools::SandboxPolicy policy;
    policy.command_output_cap = 256;
    tools::Workspace ws(dir.path(), policy);
    const auto obs = run_command(ws, "cat big.txt");
    CHECK(obs.joined_text().find("[output truncated]") != std::string::npos);
  }

  TEST_CASE("command lines split on whitespace with quote support") {
    const auto argv = util::split_command_line("cp 'my file.txt' \"dest dir/out.txt\"");
    REQUIRE(argv.size() == 3);
    CHECK(argv[0] == "cp");
    CHECK(argv[1] == "my file.txt");
    CHECK(argv[2] == "dest dir/out.txt");
    CHECK(util::split_command_line("   ").empty());
  }

  TEST_CASE("nonzero exits are surfaced as errors with output") {
    fixtures::TempDir dir{"exec"};
    tools::Workspace ws(dir.path());
    const auto obs = run_command(ws, "cat does_not_exist.txt");
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("exit ") != std::string::npos);
  }
}
