#pragma once

#include <cstdint>
#include <vector>

#include "deckhand/result.hpp"

namespace deckhand::img {

/// Packed 8-bit RGB raster, row-major, 3 bytes per pixel.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  void fill(std::uint8_t r, std::uint8_t g, std::uint8_t b);
  void fill_rect(int x, int y, int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  static RasterImage solid(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

std::vector<std::uint8_t> encode_png(const RasterImage& image);
Result<RasterImage> decode_png(const std::vector<std::uint8_t>& bytes);

}  // namespace deckhand::img
