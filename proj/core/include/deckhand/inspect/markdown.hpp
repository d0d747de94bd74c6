#pragma once

#include <string>
#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::inspect {

/// Splits a manuscript into slide source blocks on separator lines that
/// consist solely of `---` (outside fenced code blocks). Always returns at
/// least one block for non-empty input.
Result<std::vector<std::string>> split_slides(const std::string& manuscript);

/// One markdown image reference: ![alt](target).
struct ImageRef {
  std::string alt;
  std::string target;
  int slide_index = 0;
};

/// Scans slide blocks for markdown image references, in document order.
std::vector<ImageRef> scan_images(const std::vector<std::string>& slides);

}  // namespace deckhand::inspect
