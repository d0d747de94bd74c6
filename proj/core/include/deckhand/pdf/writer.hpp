#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deckhand/img/png_codec.hpp"

namespace deckhand::pdf {

/// One output page: media box in points, an optional full-bleed raster of the
/// rendered slide, and the page's readable text (embedded as a text layer so
/// it survives extraction).
struct PageSpec {
  double width_pt = 0.0;
  double height_pt = 0.0;
  std::optional<img::RasterImage> raster;
  std::string text;
};

/// Serializes the pages into a single PDF document.
std::vector<std::uint8_t> write_pdf(const std::vector<PageSpec>& pages);

}  // namespace deckhand::pdf
