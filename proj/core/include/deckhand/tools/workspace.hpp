#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::tools {

struct SandboxPolicy {
  std::set<std::string> command_allowlist = {"ls", "cat", "wc", "cp", "mv", "mkdir"};
  int command_timeout_ms = 30000;
  std::size_t command_output_cap = 64 * 1024;
  std::size_t max_file_bytes = 10 * 1024 * 1024;
  std::size_t max_download_bytes = 10 * 1024 * 1024;
  std::size_t fetch_text_cap = 20000;
  bool network_enabled = false;
};

/// A sandboxed directory all tool file access is confined to. Every resolved
/// path must stay under the root after normalization and symlink resolution.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path root, SandboxPolicy policy = {});

  const std::filesystem::path& root() const { return root_; }
  const SandboxPolicy& policy() const { return policy_; }

  /// Maps a tool-supplied path to an absolute path under the root, or errors
  /// on containment violations (.., absolute paths, symlink escapes).
  Result<std::filesystem::path> resolve(const std::string& relative) const;

  /// Inverse of resolve for reporting: absolute path -> workspace-relative.
  std::string relative(const std::filesystem::path& abs) const;

  Result<std::string> read_text(const std::string& relative) const;
  Result<void> write_text(const std::string& relative, const std::string& content) const;
  Result<void> write_bytes(const std::string& relative, const std::vector<std::uint8_t>& bytes) const;

 private:
  std::filesystem::path root_;
  SandboxPolicy policy_;
};

}  // namespace deckhand::tools
