#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace deckhand::prompts {

/// Prompt texts keyed by asset name (researcher_system, presenter_system,
/// critic_researcher, critic_presenter, persona_query, persona_query_detail,
/// judge_rubric, judge_consistency, judge_quality). Embedded defaults ship in
/// the binary; a prompt directory overrides them file by file
/// (`<name>.txt`), which keeps every prompt operator-editable.
class PromptSet {
 public:
  PromptSet();  // embedded defaults

  /// Overrides any prompt that has a matching `<name>.txt` in `dir`.
  void load_overrides(const std::filesystem::path& dir);

  const std::string& get(const std::string& name) const;
  bool has(const std::string& name) const;
  const std::map<std::string, std::string>& all() const { return prompts_; }

 private:
  std::map<std::string, std::string> prompts_;
};

/// Replaces {slot} placeholders.
std::string fill(std::string text, const std::map<std::string, std::string>& slots);

}  // namespace deckhand::prompts
