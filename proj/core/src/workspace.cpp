#include "deckhand/tools/workspace.hpp"

#include <fstream>
#include <sstream>

namespace deckhand::tools {

namespace fs = std::filesystem;

Workspace::Workspace(fs::path root, SandboxPolicy policy) : policy_(std::move(policy)) {
  std::error_code ec;
  fs::create_directories(root, ec);
  root_ = fs::weakly_canonical(root, ec);
  if (ec) root_ = fs::absolute(root);
}

namespace {

bool is_under(const fs::path& candidate, const fs::path& root) {
  auto root_it = root.begin();
  auto cand_it = candidate.begin();
  for (; root_it != root.end(); ++root_it, ++cand_it) {
    if (cand_it == candidate.end() || *cand_it != *root_it) return false;
  }
  return true;
}

}  // namespace

Result<fs::path> Workspace::resolve(const std::string& relative) const {
  if (relative.empty()) return Result<fs::path>(root_);
  fs::path rel(relative);
  if (rel.is_absolute() || relative.front() == '~')
    return Err("path outside workspace: " + relative);

  // Lexical containment first: reject traversals before touching the disk.
  fs::path combined = (root_ / rel).lexically_normal();
  if (!is_under(combined, root_)) return Err("path outside workspace: " + relative);

  // Then symlink containment on whatever prefix exists.
  std::error_code ec;
  fs::path canonical = fs::weakly_canonical(combined, ec);
  if (!ec && !is_under(canonical, root_))
    return Err("path outside workspace: " + relative);
  return Result<fs::path>(combined);
}

std::string Workspace::relative(const fs::path& abs) const {
  std::error_code ec;
  fs::path rel = fs::relative(abs, root_, ec);
  if (ec || rel.empty()) return abs.string();
  return rel.generic_string();
}

Result<std::string> Workspace::read_text(const std::string& relative) const {
  auto path = resolve(relative);
  if (!path) return path.error();
  std::ifstream in(path.value(), std::ios::binary);
  if (!in) return Err("cannot open file: " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result<void> Workspace::write_text(const std::string& relative, const std::string& content) const {
  if (content.size() > policy_.max_file_bytes)
    return Err("content exceeds the workspace file size limit");
  auto path = resolve(relative);
  if (!path) return path.error();
  std::error_code ec;
  fs::create_directories(path.value().parent_path(), ec);
  std::ofstream out(path.value(), std::ios::binary | std::ios::trunc);
  if (!out) return Err("cannot open for writing: " + relative);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) return Err("write failed: " + relative);
  return {};
}

Result<void> Workspace::write_bytes(const std::string& relative,
                                    const std::vector<std::uint8_t>& bytes) const {
  std::string as_text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  return write_text(relative, as_text);
}

}  // namespace deckhand::tools
