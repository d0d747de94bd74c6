#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace deckhand::tools {

using json = nlohmann::json;

enum class ToolCategory { kRetrieve, kFile, kReason, kControl, kCreate };

std::string to_string(ToolCategory category);

enum class AgentRole { kResearcher, kPresenter };

std::string to_string(AgentRole role);
AgentRole agent_role_from_string(const std::string& s);

struct ParamSpec {
  std::string name;
  std::string type = "string";  // string | integer | boolean | object
  bool required = false;
  std::string description;
};

struct ToolSpec {
  std::string name;
  ToolCategory category = ToolCategory::kFile;
  std::string description;
  std::vector<ParamSpec> params;
};

/// Role-filtered tool set. The researcher carries the retrieve/create tools
/// and inspect_manuscript; the presenter carries the file tools and
/// inspect_slide. Control tools and thinking are shared.
class ToolRegistry {
 public:
  ToolRegistry(AgentRole role, std::vector<ToolSpec> specs);

  AgentRole role() const { return role_; }
  const std::vector<ToolSpec>& specs() const { return specs_; }
  bool contains(const std::string& name) const;
  const ToolSpec* find(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Manifest sent to the model client: name, description, parameter schema.
  json manifest() const;

 private:
  AgentRole role_;
  std::vector<ToolSpec> specs_;
};

/// All tool specifications, in stable order.
const std::vector<ToolSpec>& all_tool_specs();

ToolRegistry build_registry(AgentRole role);

}  // namespace deckhand::tools
