#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <semaphore>
#include <string>
#include <vector>

#include "deckhand/img/png_codec.hpp"
#include "deckhand/inspect/preset.hpp"
#include "deckhand/pdf/writer.hpp"
#include "deckhand/result.hpp"

namespace deckhand::inspect {

/// Post-render page state: the raster at the requested viewport plus the
/// page's readable text.
struct RenderResult {
  img::RasterImage raster;
  std::string text;
};

/// Headless rendering backend. The built-in rasterizer covers deterministic
/// runs; the browser backend shells out to a configured binary.
class RendererClient {
 public:
  virtual ~RendererClient() = default;
  virtual Result<RenderResult> render(const std::filesystem::path& html_path, int width_px,
                                      int height_px) = 0;
};

/// Deterministic in-process rasterizer for a slide-sized subset of HTML/CSS:
/// page background color (body/html rules and inline styles, including the
/// first color of a gradient) and absolutely positioned boxes with explicit
/// offsets, sizes, and background colors. Text content is extracted, not
/// drawn.
class BuiltinRenderer : public RendererClient {
 public:
  Result<RenderResult> render(const std::filesystem::path& html_path, int width_px,
                              int height_px) override;
};

struct BrowserRendererConfig {
  std::string binary_path;
  int timeout_ms = 15000;
};

/// Shells out to a headless browser (chromium-compatible flags) for
/// screenshots; page text falls back to tag-stripped file content.
class BrowserRenderer : public RendererClient {
 public:
  explicit BrowserRenderer(BrowserRendererConfig config);
  Result<RenderResult> render(const std::filesystem::path& html_path, int width_px,
                              int height_px) override;

 private:
  BrowserRendererConfig config_;
};

/// Bounds concurrent page renders across trajectories.
class RendererPool : public RendererClient {
 public:
  RendererPool(std::shared_ptr<RendererClient> inner, int max_concurrent = 2);
  Result<RenderResult> render(const std::filesystem::path& html_path, int width_px,
                              int height_px) override;

 private:
  std::shared_ptr<RendererClient> inner_;
  std::counting_semaphore<64> slots_;
};

/// Rendered slide raster in lossless PNG form, exactly preset-sized.
struct SlideImage {
  std::vector<std::uint8_t> png;
  int width = 0;
  int height = 0;
  std::string source_path;
};

Result<SlideImage> inspect_slide(const std::filesystem::path& html_path,
                                 const AspectPreset& preset, RendererClient& renderer);

/// Renders the page and wraps it as a single-page PDF whose media box matches
/// the preset ratio.
Result<std::vector<std::uint8_t>> print_to_pdf(const std::filesystem::path& html_path,
                                               const AspectPreset& preset,
                                               RendererClient& renderer);

/// Parses a CSS color token (named, #rgb(a), #rrggbb, rgb()/rgba(),
/// or the first color inside a gradient). Returns false if none found.
bool parse_css_color(const std::string& value, std::uint8_t* r, std::uint8_t* g, std::uint8_t* b);

}  // namespace deckhand::inspect
