#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::verify {

/// Parsed facts about a deck PDF: exact page count, first-page media box in
/// points, and the text concatenated across all pages.
struct PdfSummary {
  int page_count = 0;
  double first_page_width_pt = 0.0;
  double first_page_height_pt = 0.0;
  std::string text;
};

Result<PdfSummary> summarize_pdf(const std::vector<std::uint8_t>& bytes);
Result<PdfSummary> summarize_pdf(const std::filesystem::path& path);

}  // namespace deckhand::verify
