#include "deckhand/tools/dispatch.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "deckhand/inspect/manuscript.hpp"
#include "deckhand/tools/todo.hpp"
#include "deckhand/util/html_text.hpp"
#include "deckhand/util/process.hpp"
#include "deckhand/verify/pdf_summary.hpp"

namespace deckhand::tools {

namespace fs = std::filesystem;
using agent::ContentPart;
using agent::ToolCall;

Observation Observation::text(std::string body) {
  Observation o;
  o.parts.push_back(ContentPart::make_text(std::move(body)));
  return o;
}

Observation Observation::error(std::string body) {
  Observation o;
  o.parts.push_back(ContentPart::make_text("error: " + std::move(body)));
  o.is_error = true;
  return o;
}

std::string Observation::joined_text() const {
  std::string out;
  for (const auto& p : parts) {
    if (p.kind != ContentPart::Kind::kText) continue;
    if (!out.empty()) out += "\n";
    out += p.text;
  }
  return out;
}

namespace {

struct Args {
  const json& j;

  Result<std::string> str(const char* key) const {
    if (!j.contains(key) || !j.at(key).is_string())
      return Err(std::string("missing or non-string argument '") + key + "'");
    return j.at(key).get<std::string>();
  }
  std::string str_or(const char* key, const std::string& fallback) const {
    if (j.contains(key) && j.at(key).is_string()) return j.at(key).get<std::string>();
    return fallback;
  }
  int int_or(const char* key, int fallback) const {
    if (j.contains(key) && j.at(key).is_number()) return j.at(key).get<int>();
    return fallback;
  }
};

Result<void> validate_args(const ToolSpec& spec, const json& arguments) {
  if (!arguments.is_object()) return Err("arguments must be an object");
  for (const auto& p : spec.params) {
    if (!p.required) continue;
    if (!arguments.contains(p.name)) return Err("missing required argument '" + p.name + "'");
    const auto& v = arguments.at(p.name);
    if (p.type == "string" && !v.is_string())
      return Err("argument '" + p.name + "' must be a string");
    if (p.type == "integer" && !v.is_number())
      return Err("argument '" + p.name + "' must be a number");
    if (p.type == "boolean" && !v.is_boolean())
      return Err("argument '" + p.name + "' must be a boolean");
  }
  return {};
}

void record_artifact(ToolContext& ctx, const std::string& rel) {
  if (!ctx.artifacts) return;
  if (std::find(ctx.artifacts->begin(), ctx.artifacts->end(), rel) == ctx.artifacts->end())
    ctx.artifacts->push_back(rel);
}

std::string render_results(const std::vector<SearchResult>& results) {
  if (results.empty()) return "No results.";
  std::ostringstream out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << (i + 1) << ". " << results[i].title << "\n   " << results[i].url << "\n   "
        << results[i].snippet << "\n";
  }
  return out.str();
}

Observation do_search(const std::string& kind, const Args& args, ToolContext& ctx) {
  auto query = args.str("query");
  if (!query) return Observation::error(query.error().message);
  const int count = std::clamp(args.int_or("count", 10), 1, 10);
  auto results = ctx.provider->search(kind, query.value(), count);
  if (!results) return Observation::error(results.error().message);
  return Observation::text(render_results(results.value()));
}

Observation do_fetch_url(const Args& args, ToolContext& ctx) {
  auto url = args.str("url");
  if (!url) return Observation::error(url.error().message);
  if (url.value().rfind("http://", 0) != 0 && url.value().rfind("https://", 0) != 0)
    return Observation::error("unsupported URL scheme (http/https only): " + url.value());
  auto page = ctx.provider->fetch(url.value());
  if (!page) return Observation::error(page.error().message);
  const std::string& type = page.value().content_type;
  const bool texty = type.empty() || type.find("text/") == 0 || type.find("json") != std::string::npos ||
                     type.find("xml") != std::string::npos;
  if (!texty)
    return Observation::error("content type '" + type +
                              "' is not text; use download_file to store it locally");
  bool truncated = false;
  std::string text = util::html_to_text_capped(page.value().body,
                                               ctx.workspace->policy().fetch_text_cap, &truncated);
  return Observation::text(std::move(text));
}

Observation do_download_file(const Args& args, ToolContext& ctx) {
  auto url = args.str("url");
  if (!url) return Observation::error(url.error().message);
  if (url.value().rfind("http://", 0) != 0 && url.value().rfind("https://", 0) != 0)
    return Observation::error("unsupported URL scheme (http/https only): " + url.value());
  auto page = ctx.provider->fetch(url.value());
  if (!page) return Observation::error(page.error().message);
  if (page.value().body.size() > ctx.workspace->policy().max_download_bytes)
    return Observation::error("download exceeds the size limit");

  std::string name = args.str_or("filename", "");
  if (name.empty()) {
    name = url.value().substr(url.value().find_last_of('/') + 1);
    if (name.empty() || name.find('?') != std::string::npos)
      name = "download_" + fixture_key(json{{"url", url.value()}}).substr(0, 8);
  }
  name = fs::path(name).filename().string();
  const std::string rel = "assets/" + name;
  auto written = ctx.workspace->write_text(rel, page.value().body);
  if (!written) return Observation::error(written.error().message);
  record_artifact(ctx, rel);
  return Observation::text("Downloaded " + std::to_string(page.value().body.size()) +
                           " bytes to " + rel);
}

Observation do_read_file(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto abs = ctx.workspace->resolve(rel.value());
  if (!abs) return Observation::error(abs.error().message);
  if (!fs::exists(abs.value())) return Observation::error("file not found: " + rel.value());
  if (fs::is_directory(abs.value()))
    return Observation::error(rel.value() + " is a directory; use list_directory");
  auto text = ctx.workspace->read_text(rel.value());
  if (!text) return Observation::error(text.error().message);
  constexpr std::size_t kCap = 64 * 1024;
  if (text.value().size() > kCap)
    return Observation::text(text.value().substr(0, kCap) + "\n[truncated]");
  return Observation::text(text.value());
}

Observation do_write_file(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto content = args.str("content");
  if (!content) return Observation::error(content.error().message);
  auto written = ctx.workspace->write_text(rel.value(), content.value());
  if (!written) return Observation::error(written.error().message);
  record_artifact(ctx, rel.value());
  return Observation::text("Wrote " + std::to_string(content.value().size()) + " bytes to " +
                           rel.value());
}

Observation do_edit_file(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto old_s = args.str("old_string");
  if (!old_s) return Observation::error(old_s.error().message);
  auto new_s = args.str("new_string");
  if (!new_s) return Observation::error(new_s.error().message);
  auto text = ctx.workspace->read_text(rel.value());
  if (!text) return Observation::error(text.error().message);
  const std::size_t at = text.value().find(old_s.value());
  if (at == std::string::npos)
    return Observation::error("old_string not found in " + rel.value());
  std::string updated = text.value();
  updated.replace(at, old_s.value().size(), new_s.value());
  auto written = ctx.workspace->write_text(rel.value(), updated);
  if (!written) return Observation::error(written.error().message);
  record_artifact(ctx, rel.value());
  return Observation::text("Edited " + rel.value());
}

Observation do_move_file(const Args& args, ToolContext& ctx) {
  auto src = args.str("source");
  if (!src) return Observation::error(src.error().message);
  auto dst = args.str("destination");
  if (!dst) return Observation::error(dst.error().message);
  auto src_abs = ctx.workspace->resolve(src.value());
  if (!src_abs) return Observation::error(src_abs.error().message);
  auto dst_abs = ctx.workspace->resolve(dst.value());
  if (!dst_abs) return Observation::error(dst_abs.error().message);
  if (!fs::exists(src_abs.value())) return Observation::error("file not found: " + src.value());
  std::error_code ec;
  fs::create_directories(dst_abs.value().parent_path(), ec);
  fs::rename(src_abs.value(), dst_abs.value(), ec);
  if (ec) return Observation::error("move failed: " + ec.message());
  record_artifact(ctx, dst.value());
  return Observation::text("Moved " + src.value() + " to " + dst.value());
}

Observation do_create_directory(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto abs = ctx.workspace->resolve(rel.value());
  if (!abs) return Observation::error(abs.error().message);
  std::error_code ec;
  fs::create_directories(abs.value(), ec);
  if (ec) return Observation::error("mkdir failed: " + ec.message());
  return Observation::text("Created directory " + rel.value());
}

Observation do_list_directory(const Args& args, ToolContext& ctx) {
  const std::string rel = args.str_or("path", "");
  auto abs = ctx.workspace->resolve(rel);
  if (!abs) return Observation::error(abs.error().message);
  if (!fs::exists(abs.value())) return Observation::error("directory not found: " + rel);
  if (!fs::is_directory(abs.value())) return Observation::error(rel + " is not a directory");
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(abs.value())) {
    std::string name = entry.path().filename().string();
    if (entry.is_directory()) name += "/";
    names.push_back(std::move(name));
  }
  std::sort(names.begin(), names.end());
  std::string out = rel.empty() ? std::string(".") : rel;
  out += ":\n";
  for (const auto& n : names) out += "  " + n + "\n";
  if (names.empty()) out += "  (empty)\n";
  return Observation::text(out);
}

Observation do_execute_command(const Args& args, ToolContext& ctx) {
  auto cmdline = args.str("command");
  if (!cmdline) return Observation::error(cmdline.error().message);
  const auto argv = util::split_command_line(cmdline.value());
  if (argv.empty()) return Observation::error("empty command");
  const auto& policy = ctx.workspace->policy();
  const std::string head = fs::path(argv[0]).filename().string();
  if (!policy.command_allowlist.count(head)) {
    std::string allowed;
    for (const auto& a : policy.command_allowlist) allowed += (allowed.empty() ? "" : ", ") + a;
    return Observation::error("command '" + head + "' is not allowlisted (allowed: " + allowed + ")");
  }
  auto run = util::run_process(argv, ctx.workspace->root(), policy.command_timeout_ms,
                               policy.command_output_cap);
  if (!run) return Observation::error(run.error().message);
  const auto& r = run.value();
  if (r.timed_out)
    return Observation::error("command timed out after " +
                              std::to_string(policy.command_timeout_ms) + " ms\npartial output:\n" +
                              r.output);
  std::string out = "exit " + std::to_string(r.exit_code) + "\n" + r.output;
  Observation obs = Observation::text(std::move(out));
  obs.is_error = r.exit_code != 0;
  return obs;
}

Observation do_convert_to_markdown(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto abs = ctx.workspace->resolve(rel.value());
  if (!abs) return Observation::error(abs.error().message);
  if (!fs::exists(abs.value())) return Observation::error("file not found: " + rel.value());
  const std::string ext = abs.value().extension().string();
  if (ext == ".pdf") {
    auto summary = verify::summarize_pdf(abs.value());
    if (!summary) return Observation::error(summary.error().message);
    return Observation::text("# " + fs::path(rel.value()).stem().string() + "\n\n" +
                             summary.value().text);
  }
  auto text = ctx.workspace->read_text(rel.value());
  if (!text) return Observation::error(text.error().message);
  if (ext == ".html" || ext == ".htm") return Observation::text(util::html_to_text(text.value()));
  return Observation::text(text.value());
}

Observation model_mediated(const char* task_prompt, const Args& args, ToolContext& ctx,
                           bool image_input) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  if (!ctx.helper_model) return Observation::error("no model client configured for this tool");
  auto abs = ctx.workspace->resolve(rel.value());
  if (!abs) return Observation::error(abs.error().message);
  if (!fs::exists(abs.value())) return Observation::error("file not found: " + rel.value());

  std::vector<agent::ModelMessage> messages;
  messages.push_back(agent::ModelMessage::text(agent::Role::kSystem, task_prompt));
  agent::ModelMessage user;
  user.role = agent::Role::kUser;
  if (image_input) {
    auto text = ctx.workspace->read_text(rel.value());
    if (!text) return Observation::error(text.error().message);
    std::vector<std::uint8_t> bytes(text.value().begin(), text.value().end());
    const std::string media = abs.value().extension() == ".png" ? "image/png" : "image/jpeg";
    user.content.push_back(ContentPart::make_image(std::move(bytes), media));
  } else {
    Args sub{args.j};
    std::string doc_text;
    if (abs.value().extension() == ".pdf") {
      auto summary = verify::summarize_pdf(abs.value());
      if (!summary) return Observation::error(summary.error().message);
      doc_text = summary.value().text;
    } else {
      auto text = ctx.workspace->read_text(rel.value());
      if (!text) return Observation::error(text.error().message);
      doc_text = text.value();
    }
    std::string question = sub.str_or("question", "Summarize the document.");
    user.content.push_back(ContentPart::make_text(question + "\n\n---\n" + doc_text));
  }
  messages.push_back(std::move(user));
  auto reply = ctx.helper_model->complete(messages, json::array());
  if (!reply) return Observation::error(reply.error().message);
  return Observation::text(reply.value().text);
}

Observation do_image_generation(const Args& args, ToolContext& ctx) {
  auto prompt = args.str("prompt");
  if (!prompt) return Observation::error(prompt.error().message);
  const int width = args.int_or("width", 512);
  const int height = args.int_or("height", 512);
  auto image = ctx.provider->generate_image(prompt.value(), width, height);
  if (!image) return Observation::error(image.error().message);
  const std::string rel =
      "assets/gen_" + fixture_key(json{{"prompt", prompt.value()}}).substr(0, 12) + ".png";
  auto written = ctx.workspace->write_bytes(rel, image.value().png_bytes);
  if (!written) return Observation::error(written.error().message);
  record_artifact(ctx, rel);
  return Observation::text("Generated image saved to " + rel + " (" +
                           std::to_string(image.value().width) + "x" +
                           std::to_string(image.value().height) + ")");
}

Observation do_inspect_manuscript(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  auto diag = inspect::inspect_manuscript(rel.value(), *ctx.workspace);
  if (!diag) return Observation::error(diag.error().message);
  return Observation::text(diag.value().render());
}

Observation do_inspect_slide(const Args& args, ToolContext& ctx) {
  auto rel = args.str("path");
  if (!rel) return Observation::error(rel.error().message);
  if (!ctx.renderer) return Observation::error("no renderer configured");
  inspect::AspectPreset preset = ctx.preset;
  const std::string preset_name = args.str_or("preset", "");
  if (!preset_name.empty()) {
    auto named = inspect::preset_by_name(preset_name);
    if (!named) return Observation::error("unknown aspect preset: " + preset_name);
    preset = *named;
  }
  auto abs = ctx.workspace->resolve(rel.value());
  if (!abs) return Observation::error(abs.error().message);
  auto image = inspect::inspect_slide(abs.value(), preset, *ctx.renderer);
  if (!image) return Observation::error(image.error().message);
  Observation obs = Observation::text(
      "Rendered " + rel.value() + " at " + std::to_string(image.value().width) + "x" +
      std::to_string(image.value().height) + " (" + preset.name + "). The screenshot follows.");
  obs.parts.push_back(ContentPart::make_image(image.value().png, "image/png"));
  return obs;
}

Observation do_thinking(const Args& args) {
  auto thought = args.str("thought");
  if (!thought) return Observation::error(thought.error().message);
  return Observation::text("Thought recorded.");
}

Observation do_todo(const std::string& name, const Args& args, ToolContext& ctx) {
  TodoStore store(*ctx.workspace);
  if (name == "todo_create") {
    auto text = args.str("text");
    if (!text) return Observation::error(text.error().message);
    auto item = store.create(text.value());
    if (!item) return Observation::error(item.error().message);
    return Observation::text("Created " + item.value().id + ".\n" + store.render());
  }
  if (name == "todo_update") {
    auto id = args.str("id");
    if (!id) return Observation::error(id.error().message);
    auto state = args.str("state");
    if (!state) return Observation::error(state.error().message);
    if (state.value() != "open" && state.value() != "done")
      return Observation::error("state must be 'open' or 'done'");
    auto updated = store.update(id.value(), state.value() == "done");
    if (!updated) return Observation::error(updated.error().message);
    return Observation::text(store.render());
  }
  return Observation::text(store.render());
}

}  // namespace

Observation dispatch(const ToolRegistry& registry, const ToolCall& call, ToolContext& ctx) {
  const ToolSpec* spec = registry.find(call.name);
  if (spec == nullptr) {
    std::string valid;
    for (const auto& n : registry.names()) valid += (valid.empty() ? "" : ", ") + n;
    return Observation::error("unknown tool '" + call.name + "'; valid tools: " + valid);
  }
  const json arguments = call.arguments.is_null() ? json::object() : call.arguments;
  if (auto ok = validate_args(*spec, arguments); !ok)
    return Observation::error(ok.error().message);
  if (ctx.workspace == nullptr) return Observation::error("no workspace bound");

  const Args args{arguments};
  const std::string& name = call.name;

  if (name == "search_web") return do_search("web", args, ctx);
  if (name == "search_images") return do_search("images", args, ctx);
  if (name == "search_papers") return do_search("papers", args, ctx);
  if (name == "fetch_url") return do_fetch_url(args, ctx);
  if (name == "get_paper_authors") {
    auto title = args.str("title");
    if (!title) return Observation::error(title.error().message);
    auto text = ctx.provider->paper_authors(title.value());
    if (!text) return Observation::error(text.error().message);
    return Observation::text(text.value());
  }
  if (name == "get_scholar_details") {
    auto who = args.str("name");
    if (!who) return Observation::error(who.error().message);
    auto text = ctx.provider->scholar_details(who.value());
    if (!text) return Observation::error(text.error().message);
    return Observation::text(text.value());
  }
  if (name == "document_analyze")
    return model_mediated(
        "You are a document analyst. Answer the question about the attached document "
        "concisely and factually.",
        args, ctx, false);
  if (name == "image_caption")
    return model_mediated("Describe the attached image in one or two sentences.", args, ctx,
                          true);
  if (name == "convert_to_markdown") return do_convert_to_markdown(args, ctx);
  if (name == "read_file") return do_read_file(args, ctx);
  if (name == "write_file") return do_write_file(args, ctx);
  if (name == "edit_file") return do_edit_file(args, ctx);
  if (name == "move_file") return do_move_file(args, ctx);
  if (name == "download_file") return do_download_file(args, ctx);
  if (name == "execute_command") return do_execute_command(args, ctx);
  if (name == "create_directory") return do_create_directory(args, ctx);
  if (name == "list_directory") return do_list_directory(args, ctx);
  if (name == "thinking") return do_thinking(args);
  if (name == "inspect_slide") return do_inspect_slide(args, ctx);
  if (name == "inspect_manuscript") return do_inspect_manuscript(args, ctx);
  if (name == "todo_create" || name == "todo_update" || name == "todo_list")
    return do_todo(name, args, ctx);
  if (name == "finalize")
    return Observation::error("finalize is handled by the agent runtime, not dispatched");
  if (name == "image_generation") return do_image_generation(args, ctx);

  return Observation::error("tool '" + name + "' has no executor");
}

}  // namespace deckhand::tools
