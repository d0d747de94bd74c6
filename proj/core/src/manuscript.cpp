#include "deckhand/inspect/manuscript.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "deckhand/inspect/markdown.hpp"

namespace deckhand::inspect {

namespace fs = std::filesystem;

std::string to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::kMissingPath: return "missing_path";
    case FindingKind::kExternalUrl: return "external_url";
    case FindingKind::kMissingAlt: return "missing_alt";
    case FindingKind::kDuplicateUse: return "duplicate_use";
  }
  return "missing_path";
}

std::string ManuscriptDiagnostics::render() const {
  std::ostringstream out;
  out << "Manuscript diagnostics\n"
      << "  slides: " << slide_count << "\n"
      << "  language: " << to_string(detected_language) << "\n";
  if (image_findings.empty()) {
    out << "  images: no issues\n";
  } else {
    out << "  image findings:\n";
    for (const auto& f : image_findings) {
      out << "    - [" << to_string(f.kind) << "] slide " << (f.slide_index + 1) << ": "
          << f.detail << "\n";
    }
  }
  return out.str();
}

Result<ManuscriptDiagnostics> inspect_manuscript(const std::string& path,
                                                 const tools::Workspace& workspace) {
  auto abs = workspace.resolve(path);
  if (!abs) return abs.error();
  if (!fs::exists(abs.value()) || fs::is_directory(abs.value()))
    return Err("manuscript not found: " + path);
  auto text = workspace.read_text(path);
  if (!text) return text.error();
  if (!is_valid_utf8(text.value())) return Err("manuscript is not valid UTF-8: " + path);

  auto blocks = split_slides(text.value());
  if (!blocks) return blocks.error();

  ManuscriptDiagnostics diag;
  diag.slide_count = static_cast<int>(blocks.value().size());
  diag.detected_language = detect_language(text.value());

  const fs::path manuscript_dir = fs::path(path).parent_path();
  std::map<std::string, std::vector<int>> local_uses;  // normalized asset -> slide indices

  for (const auto& ref : scan_images(blocks.value())) {
    const bool external = ref.target.rfind("http://", 0) == 0 || ref.target.rfind("https://", 0) == 0;
    if (external) {
      diag.image_findings.push_back({FindingKind::kExternalUrl, ref.slide_index,
                                     "external image URL should be downloaded locally: " + ref.target});
    } else {
      const std::string rel = (manuscript_dir / ref.target).lexically_normal().generic_string();
      auto resolved = workspace.resolve(rel);
      const bool exists = resolved && fs::exists(resolved.value());
      if (!exists) {
        diag.image_findings.push_back(
            {FindingKind::kMissingPath, ref.slide_index, "referenced image does not exist: " + ref.target});
      } else {
        local_uses[rel].push_back(ref.slide_index);
      }
    }
    if (ref.alt.empty()) {
      diag.image_findings.push_back(
          {FindingKind::kMissingAlt, ref.slide_index, "image has empty alt text: " + ref.target});
    }
  }

  for (const auto& [asset, slides] : local_uses) {
    std::set<int> distinct(slides.begin(), slides.end());
    if (distinct.size() < 2) continue;
    std::string where;
    for (int s : distinct) {
      if (!where.empty()) where += " and ";
      where += std::to_string(s + 1);
    }
    diag.image_findings.push_back({FindingKind::kDuplicateUse, *distinct.begin(),
                                   "asset " + asset + " is reused on slides " + where});
  }

  return diag;
}

}  // namespace deckhand::inspect
