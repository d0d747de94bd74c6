#include <doctest.h>

#include "../support/fixtures.hpp"
#include "deckhand/pdf/writer.hpp"
#include "deckhand/tools/dispatch.hpp"

using namespace deckhand;
using agent::ToolCall;
using tools::Observation;

namespace {

struct DispatchHarness {
  fixtures::TempDir dir{"dispatch"};
  tools::Workspace workspace{dir.path()};
  tools::StubProvider provider{};
  inspect::BuiltinRenderer renderer;
  tools::ToolRegistry registry = tools::build_registry(tools::AgentRole::kResearcher);
  tools::ToolContext ctx;

  DispatchHarness() {
    ctx.workspace = &workspace;
    ctx.provider = &provider;
    ctx.renderer = &renderer;
  }

  Observation call(const std::string& name, nlohmann::json args) {
    ToolCall c;
    c.id = "t1";
    c.name = name;
    c.arguments = std::move(args);
    return tools::dispatch(registry, c, ctx);
  }
};

}  // namespace

TEST_SUITE("dispatch") {
  TEST_CASE("unknown tools return an error naming the valid ones") {
    DispatchHarness h;
    const auto obs = h.call("launch_rockets", {});
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("valid tools") != std::string::npos);
    CHECK(obs.joined_text().find("write_file") != std::string::npos);
  }

  TEST_CASE("sandbox violations become error observations") {
    DispatchHarness h;
    const auto obs = h.call("read_file", {{"path", "../../etc/hosts"}});
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("outside workspace") != std::string::npos);
  }

  TEST_CASE("write_file persists the exact bytes") {
    DispatchHarness h;
    const std::string html = "<html>\xE4\xB8\xAD\xE6\x96\x87</html>";
    const auto obs = h.call("write_file", {{"path", "slides/slide_001.html"}, {"content", html}});
    CHECK_FALSE(obs.is_error);
    CHECK(fixtures::read_file(h.dir.path() / "slides/slide_001.html") == html);
    const auto back = h.call("read_file", {{"path", "slides/slide_001.html"}});
    CHECK(back.joined_text() == html);
  }

  TEST_CASE("edit_file replaces the first occurrence and errors when absent") {
    DispatchHarness h;
    h.call("write_file", {{"path", "f.txt"}, {"content", "red green red"}});
    auto obs = h.call("edit_file",
                      {{"path", "f.txt"}, {"old_string", "red"}, {"new_string", "blue"}});
    CHECK_FALSE(obs.is_error);
    CHECK(fixtures::read_file(h.dir.path() / "f.txt") == "blue green red");
    obs = h.call("edit_file",
                 {{"path", "f.txt"}, {"old_string", "purple"}, {"new_string", "x"}});
    CHECK(obs.is_error);
  }

  TEST_CASE("search_web returns the canned fixture for that query hash") {
    fixtures::TempDir fixture_dir{"fixtures"};
    const nlohmann::json args{{"kind", "web"}, {"query", "solar microgrids"}};
    fixtures::write_file(
        fixture_dir.path() / ("search_web__" + tools::fixture_key(args) + ".json"),
        R"({"results":[{"title":"Community Solar 101","url":"https://example.org/cs","snippet":"A primer."}]})");

    DispatchHarness h;
    tools::StubProvider provider(fixture_dir.path());
    h.ctx.provider = &provider;
    const auto obs = h.call("search_web", {{"query", "solar microgrids"}});
    CHECK_FALSE(obs.is_error);
    CHECK(obs.joined_text().find("Community Solar 101") != std::string::npos);
    CHECK(obs.joined_text().find("https://example.org/cs") != std::string::npos);
  }

  TEST_CASE("stub provider is deterministic without fixtures") {
    DispatchHarness h;
    const auto a = h.call("search_web", {{"query", "wind power"}});
    const auto b = h.call("search_web", {{"query", "wind power"}});
    CHECK(a.joined_text() == b.joined_text());
    const auto c = h.call("search_web", {{"query", "something else"}});
    CHECK(a.joined_text() != c.joined_text());
  }

  TEST_CASE("todo lifecycle: create, update, list, bad id") {
    DispatchHarness h;
    auto obs = h.call("todo_create", {{"text", "draft outline"}});
    CHECK_FALSE(obs.is_error);
    obs = h.call("todo_create", {{"text", "collect images"}});
    CHECK(obs.joined_text().find("todo_2") != std::string::npos);
    obs = h.call("todo_update", {{"id", "todo_1"}, {"state", "done"}});
    CHECK_FALSE(obs.is_error);
    CHECK(obs.joined_text().find("[x] todo_1") != std::string::npos);
    obs = h.call("todo_update", {{"id", "todo_9"}, {"state", "done"}});
    CHECK(obs.is_error);
    obs = h.call("todo_list", {});
    CHECK(obs.joined_text().find("draft outline") != std::string::npos);
    CHECK(obs.joined_text().find("collect images") != std::string::npos);
  }

  TEST_CASE("fetch_url rejects non-http schemes") {
    DispatchHarness h;
    const auto obs = h.call("fetch_url", {{"url", "data:text/html;base64,PGI+"}});
    CHECK(obs.is_error);
    CHECK(obs.joined_text().find("scheme") != std::string::npos);
  }

  TEST_CASE("fetch_url extracts readable text from the fixture page") {
    fixtures::TempDir fixture_dir{"fetch_fix"};
    const nlohmann::json args{{"url", "https://example.org/page"}};
    fixtures::write_file(
        fixture_dir.path() / ("fetch_url__" + tools::fixture_key(args) + ".json"),
        nlohmann::json{
            {"content_type", "text/html"},
            {"body", "<html><head><style>p{}</style></head><body><h1>Title</h1>"
                     "<p>Body &amp; more. <a href=\"https://x.y/z\">link text</a></p>"
                     "</body></html>"}}
            .dump());
    DispatchHarness h;
    tools::StubProvider provider(fixture_dir.path());
    h.ctx.provider = &provider;
    const auto obs = h.call("fetch_url", {{"url", "https://example.org/page"}});
    CHECK_FALSE(obs.is_error);
    const std::string text = obs.joined_text();
    CHECK(text.find("Title") != std::string::npos);
    CHECK(text.find("Body & more.") != std::string::npos);
    CHECK(text.find("link text (https://x.y/z)") != std::string::npos);
    CHECK(text.find("<p>") == std::string::npos);
    // Identical calls, identical observations.
    CHECK(h.call("fetch_url", {{"url", "https://example.org/page"}}).joined_text() == text);
  }

  TEST_CASE("oversized pages are truncated with a marker") {
    fixtures::TempDir dir{"fetch_cap"};
    tools::SandboxPolicy policy;
    policy.fetch_text_cap = 64;
    tools::Workspace ws(dir.path(), policy);
    tools::StubProvider provider;
    tools::ToolContext ctx;
    ctx.workspace = &ws;
    ctx.provider = &provider;
    ToolCall c;
    c.id = "t";
    c.name = "fetch_url";
    c.arguments = {{"url", "https://example.org/huge"}};
    const auto obs =
        tools::dispatch(tools::build_registry(tools::AgentRole::kResearcher), c, ctx);
    CHECK_FALSE(obs.is_error);
    CHECK(obs.joined_text().find("[truncated]") != std::string::npos);
  }

  TEST_CASE("download_file lands under assets/ and reports the relative path") {
    DispatchHarness h;
    const auto obs = h.call("download_file", {{"url", "https://example.org/report.pdf"}});
    CHECK_FALSE(obs.is_error);
    CHECK(obs.joined_text().find("assets/report.pdf") != std::string::npos);
    CHECK(std::filesystem::exists(h.dir.path() / "assets/report.pdf"));
  }

  TEST_CASE("image_generation writes a decodable deterministic png") {
    DispatchHarness h;
    const auto a = h.call("image_generation", {{"prompt", "sunset over turbines"}});
    CHECK_FALSE(a.is_error);
    const std::string text = a.joined_text();
    const auto at = text.find("assets/");
    REQUIRE(at != std::string::npos);
    const std::string rel = text.substr(at, text.find(' ', at) - at);
    const std::string bytes = fixtures::read_file(h.dir.path() / rel);
    auto decoded = img::decode_png(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
    REQUIRE(decoded.ok());
    CHECK(decoded.value().width == 512);
    CHECK(h.call("image_generation", {{"prompt", "sunset over turbines"}}).joined_text() == text);
  }

  TEST_CASE("document_analyze routes through the helper model in isolation") {
    DispatchHarness h;
    fixtures::write_file(h.dir.path() / "notes.txt", "microgrids store energy locally");
    agent::ScriptedModelClient helper;
    helper.push_text("A summary of the notes.");
    h.ctx.helper_model = &helper;
    const auto obs = h.call("document_analyze", {{"path", "notes.txt"}});
    CHECK_FALSE(obs.is_error);
    CHECK(obs.joined_text() == "A summary of the notes.");
    REQUIRE(helper.requests().size() == 1);
    const auto& messages = helper.requests()[0].messages;
    REQUIRE(messages.size() == 2);
    CHECK(messages[0].role == agent::Role::kSystem);
    CHECK(messages[1].role == agent::Role::kUser);
    CHECK(messages[1].joined_text().find("microgrids store energy") != std::string::npos);
  }

  TEST_CASE("thinking acknowledges and requires a thought") {
    DispatchHarness h;
    CHECK_FALSE(h.call("thinking", {{"thought", "plan first"}}).is_error);
    CHECK(h.call("thinking", {}).is_error);
  }

  TEST_CASE("convert_to_markdown handles text, html, and pdf inputs") {
    DispatchHarness h;
    fixtures::write_file(h.dir.path() / "plain.txt", "already readable text");
    CHECK(h.call("convert_to_markdown", {{"path", "plain.txt"}}).joined_text() ==
          "already readable text");

    fixtures::write_file(h.dir.path() / "page.html",
                         "<html><body><h1>Head</h1><p>Body &amp; tail</p></body></html>");
    const auto html = h.call("convert_to_markdown", {{"path", "page.html"}});
    CHECK(html.joined_text().find("Head") != std::string::npos);
    CHECK(html.joined_text().find("Body & tail") != std::string::npos);
    CHECK(html.joined_text().find("<p>") == std::string::npos);

    pdf::PageSpec page;
    page.width_pt = 100;
    page.height_pt = 100;
    page.text = "extracted pdf sentence";
    const auto bytes = pdf::write_pdf({page});
    REQUIRE(h.workspace.write_bytes("doc.pdf", bytes).ok());
    const auto converted = h.call("convert_to_markdown", {{"path", "doc.pdf"}});
    CHECK_FALSE(converted.is_error);
    CHECK(converted.joined_text().find("extracted pdf sentence") != std::string::npos);

    CHECK(h.call("convert_to_markdown", {{"path", "ghost.xyz"}}).is_error);
  }

  TEST_CASE("list_directory sorts entries and marks directories") {
    DispatchHarness h;
    h.call("write_file", {{"path", "b.txt"}, {"content", "b"}});
    h.call("write_file", {{"path", "a.txt"}, {"content", "a"}});
    h.call("create_directory", {{"path", "assets"}});
    const auto obs = h.call("list_directory", {});
    const std::string text = obs.joined_text();
    CHECK(text.find("a.txt") < text.find("b.txt"));
    CHECK(text.find("assets/") != std::string::npos);
  }
}
