#include "deckhand/tools/tool_spec.hpp"

#include <algorithm>
#include <stdexcept>

namespace deckhand::tools {

std::string to_string(ToolCategory category) {
  switch (category) {
    case ToolCategory::kRetrieve: return "retrieve";
    case ToolCategory::kFile: return "file";
    case ToolCategory::kReason: return "reason";
    case ToolCategory::kControl: return "control";
    case ToolCategory::kCreate: return "create";
  }
  return "file";
}

std::string to_string(AgentRole role) {
  return role == AgentRole::kResearcher ? "researcher" : "presenter";
}

AgentRole agent_role_from_string(const std::string& s) {
  return s == "presenter" ? AgentRole::kPresenter : AgentRole::kResearcher;
}

namespace {

ParamSpec req(std::string name, std::string type, std::string desc) {
  return ParamSpec{std::move(name), std::move(type), true, std::move(desc)};
}

ParamSpec opt(std::string name, std::string type, std::string desc) {
  return ParamSpec{std::move(name), std::move(type), false, std::move(desc)};
}

std::vector<ToolSpec> make_all_specs() {
  using C = ToolCategory;
  std::vector<ToolSpec> specs;

  // Retrieve
  specs.push_back({"search_web", C::kRetrieve, "Search the web and return a ranked result list.",
                   {req("query", "string", "search query"), opt("count", "integer", "max results")}});
  specs.push_back({"search_images", C::kRetrieve, "Search for images matching a query.",
                   {req("query", "string", "search query"), opt("count", "integer", "max results")}});
  specs.push_back({"search_papers", C::kRetrieve, "Search academic papers by topic or title.",
                   {req("query", "string", "search query"), opt("count", "integer", "max results")}});
  specs.push_back({"fetch_url", C::kRetrieve, "Fetch a web page and return its readable text.",
                   {req("url", "string", "http(s) URL to fetch")}});
  specs.push_back({"get_paper_authors", C::kRetrieve, "Look up the author list of a paper.",
                   {req("title", "string", "paper title")}});
  specs.push_back({"get_scholar_details", C::kRetrieve, "Look up a scholar's profile summary.",
                   {req("name", "string", "scholar name")}});
  specs.push_back({"document_analyze", C::kRetrieve,
                   "Analyze a local document and summarize it, optionally answering a question.",
                   {req("path", "string", "workspace-relative document path"),
                    opt("question", "string", "question to answer about the document")}});
  specs.push_back({"image_caption", C::kRetrieve, "Describe the content of a local image.",
                   {req("path", "string", "workspace-relative image path")}});

  // File
  specs.push_back({"convert_to_markdown", C::kFile,
                   "Convert a local text, HTML, or PDF document to markdown-ish text.",
                   {req("path", "string", "workspace-relative file path")}});
  specs.push_back({"read_file", C::kFile, "Read a file from the workspace.",
                   {req("path", "string", "workspace-relative path")}});
  specs.push_back({"write_file", C::kFile, "Write content to a workspace file, creating parents.",
                   {req("path", "string", "workspace-relative path"),
                    req("content", "string", "exact file content")}});
  specs.push_back({"move_file", C::kFile, "Move or rename a workspace file.",
                   {req("source", "string", "existing path"), req("destination", "string", "new path")}});
  specs.push_back({"edit_file", C::kFile, "Replace the first occurrence of a string in a file.",
                   {req("path", "string", "workspace-relative path"),
                    req("old_string", "string", "text to find"),
                    req("new_string", "string", "replacement text")}});
  specs.push_back({"download_file", C::kFile,
                   "Download a URL into the workspace assets/ directory and return its relative path.",
                   {req("url", "string", "http(s) URL"), opt("filename", "string", "preferred file name")}});
  specs.push_back({"execute_command", C::kFile,
                   "Run an allowlisted command in the workspace root and capture its output.",
                   {req("command", "string", "command line to run")}});
  specs.push_back({"create_directory", C::kFile, "Create a directory (and parents) in the workspace.",
                   {req("path", "string", "workspace-relative path")}});
  specs.push_back({"list_directory", C::kFile, "List the entries of a workspace directory.",
                   {opt("path", "string", "workspace-relative path; defaults to the root")}});

  // Reason
  specs.push_back({"thinking", C::kReason, "Record a private reasoning step before acting.",
                   {req("thought", "string", "the reflection text")}});
  specs.push_back({"inspect_slide", C::kReason,
                   "Render an HTML slide at the active aspect preset and return the pixel image.",
                   {req("path", "string", "workspace-relative HTML path"),
                    opt("preset", "string", "aspect preset name override")}});
  specs.push_back({"inspect_manuscript", C::kReason,
                   "Parse a markdown manuscript and return structured diagnostics.",
                   {req("path", "string", "workspace-relative manuscript path")}});

  // Control
  specs.push_back({"todo_create", C::kControl, "Add an item to the shared todo list.",
                   {req("text", "string", "item description")}});
  specs.push_back({"todo_update", C::kControl, "Update the state of a todo item.",
                   {req("id", "string", "item id"), req("state", "string", "open or done")}});
  specs.push_back({"todo_list", C::kControl, "Show the current todo list.", {}});
  specs.push_back({"finalize", C::kControl,
                   "End the phase, handing off the manuscript path (researcher) or slides folder (presenter).",
                   {req("path", "string", "workspace-relative deliverable path")}});

  // Create
  specs.push_back({"image_generation", C::kCreate,
                   "Generate an image from a text prompt and store it under assets/.",
                   {req("prompt", "string", "image description"),
                    opt("width", "integer", "pixel width"), opt("height", "integer", "pixel height")}});

  return specs;
}

}  // namespace

const std::vector<ToolSpec>& all_tool_specs() {
  static const std::vector<ToolSpec> specs = make_all_specs();
  return specs;
}

ToolRegistry::ToolRegistry(AgentRole role, std::vector<ToolSpec> specs)
    : role_(role), specs_(std::move(specs)) {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    for (std::size_t k = i + 1; k < specs_.size(); ++k) {
      if (specs_[i].name == specs_[k].name)
        throw std::invalid_argument("duplicate tool name in registry: " + specs_[i].name);
    }
  }
}

bool ToolRegistry::contains(const std::string& name) const { return find(name) != nullptr; }

const ToolSpec* ToolRegistry::find(const std::string& name) const {
  for (const auto& s : specs_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> ToolRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const auto& s : specs_) out.push_back(s.name);
  return out;
}

json ToolRegistry::manifest() const {
  json tools = json::array();
  for (const auto& spec : specs_) {
    json props = json::object();
    json required = json::array();
    for (const auto& p : spec.params) {
      props[p.name] = json{{"type", p.type}, {"description", p.description}};
      if (p.required) required.push_back(p.name);
    }
    tools.push_back(json{
        {"type", "function"},
        {"function",
         {{"name", spec.name},
          {"description", spec.description},
          {"parameters",
           {{"type", "object"}, {"properties", props}, {"required", required}}}}}});
  }
  return tools;
}

ToolRegistry build_registry(AgentRole role) {
  std::vector<ToolSpec> picked;
  for (const auto& spec : all_tool_specs()) {
    const bool shared = spec.category == ToolCategory::kControl || spec.name == "thinking";
    bool include = false;
    if (role == AgentRole::kResearcher) {
      include = shared || spec.category == ToolCategory::kRetrieve ||
                spec.category == ToolCategory::kFile || spec.category == ToolCategory::kCreate ||
                spec.name == "inspect_manuscript";
    } else {
      include = shared || spec.category == ToolCategory::kFile || spec.name == "inspect_slide";
    }
    if (include) picked.push_back(spec);
  }
  return ToolRegistry(role, std::move(picked));
}

}  // namespace deckhand::tools
