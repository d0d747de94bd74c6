#include "deckhand/img/png_codec.hpp"

#include <png.h>

#include <algorithm>
#include <cstring>

namespace deckhand::img {

void RasterImage::fill(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  fill_rect(0, 0, width, height, r, g, b);
}

void RasterImage::fill_rect(int x, int y, int w, int h, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b) {
  const int x0 = std::max(0, x);
  const int y0 = std::max(0, y);
  const int x1 = std::min(width, x + w);
  const int y1 = std::min(height, y + h);
  for (int row = y0; row < y1; ++row) {
    std::uint8_t* p = rgb.data() + (static_cast<std::size_t>(row) * width + x0) * 3;
    for (int col = x0; col < x1; ++col) {
      p[0] = r;
      p[1] = g;
      p[2] = b;
      p += 3;
    }
  }
}

RasterImage RasterImage::solid(int width, int height, std::uint8_t r, std::uint8_t g,
                               std::uint8_t b) {
  RasterImage img;
  img.width = width;
  img.height = height;
  img.rgb.resize(static_cast<std::size_t>(width) * height * 3);
  img.fill(r, g, b);
  return img;
}

std::vector<std::uint8_t> encode_png(const RasterImage& image) {
  png_image im;
  std::memset(&im, 0, sizeof(im));
  im.version = PNG_IMAGE_VERSION;
  im.width = static_cast<png_uint_32>(image.width);
  im.height = static_cast<png_uint_32>(image.height);
  im.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&im, nullptr, &size, 0, image.rgb.data(), 0, nullptr))
    return {};
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&im, out.data(), &size, 0, image.rgb.data(), 0, nullptr))
    return {};
  out.resize(size);
  return out;
}

Result<RasterImage> decode_png(const std::vector<std::uint8_t>& bytes) {
  png_image im;
  std::memset(&im, 0, sizeof(im));
  im.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&im, bytes.data(), bytes.size()))
    return Err(std::string("png decode failed: ") + im.message);
  im.format = PNG_FORMAT_RGB;
  RasterImage out;
  out.width = static_cast<int>(im.width);
  out.height = static_cast<int>(im.height);
  out.rgb.resize(PNG_IMAGE_SIZE(im));
  if (!png_image_finish_read(&im, nullptr, out.rgb.data(), 0, nullptr)) {
    png_image_free(&im);
    return Err(std::string("png decode failed: ") + im.message);
  }
  return out;
}

}  // namespace deckhand::img
