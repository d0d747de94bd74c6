#pragma once

#include <string>
#include <vector>

#include "deckhand/inspect/language.hpp"
#include "deckhand/result.hpp"
#include "deckhand/tools/workspace.hpp"

namespace deckhand::inspect {

enum class FindingKind { kMissingPath, kExternalUrl, kMissingAlt, kDuplicateUse };

std::string to_string(FindingKind kind);

struct ImageFinding {
  FindingKind kind;
  int slide_index = 0;  // 0-based; for duplicates, the first referencing slide
  std::string detail;
};

/// Structured inspection result for a markdown manuscript.
struct ManuscriptDiagnostics {
  int slide_count = 0;
  Language detected_language = Language::kUnknown;
  std::vector<ImageFinding> image_findings;

  std::string render() const;
};

/// Parses the manuscript at `path`, counts slides, detects the language, and
/// validates every referenced image asset: local paths must exist, sources
/// must not be external URLs, alt text must be present, and the same local
/// asset must not appear on multiple slides.
Result<ManuscriptDiagnostics> inspect_manuscript(const std::string& path,
                                                 const tools::Workspace& workspace);

}  // namespace deckhand::inspect
