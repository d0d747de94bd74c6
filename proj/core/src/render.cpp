#include "deckhand/inspect/render.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "deckhand/util/html_text.hpp"
#include "deckhand/util/process.hpp"

namespace deckhand::inspect {

namespace fs = std::filesystem;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

const std::map<std::string, std::uint32_t>& named_colors() {
  static const std::map<std::string, std::uint32_t> colors{
      {"black", 0x000000},  {"white", 0xffffff},  {"red", 0xff0000},
      {"green", 0x008000},  {"blue", 0x0000ff},   {"yellow", 0xffff00},
      {"orange", 0xffa500}, {"purple", 0x800080}, {"gray", 0x808080},
      {"grey", 0x808080},   {"silver", 0xc0c0c0}, {"maroon", 0x800000},
      {"navy", 0x000080},   {"teal", 0x008080},   {"olive", 0x808000},
      {"lime", 0x00ff00},   {"aqua", 0x00ffff},   {"cyan", 0x00ffff},
      {"fuchsia", 0xff00ff},{"magenta", 0xff00ff},{"brown", 0xa52a2a},
      {"pink", 0xffc0cb},   {"gold", 0xffd700},   {"ivory", 0xfffff0},
      {"beige", 0xf5f5dc},  {"coral", 0xff7f50},  {"salmon", 0xfa8072},
      {"khaki", 0xf0e68c},  {"indigo", 0x4b0082}, {"violet", 0xee82ee},
      {"lavender", 0xe6e6fa}, {"tan", 0xd2b48c},  {"crimson", 0xdc143c},
      {"darkgreen", 0x006400}, {"darkblue", 0x00008b}, {"darkred", 0x8b0000},
      {"lightgray", 0xd3d3d3}, {"lightblue", 0xadd8e6}, {"lightgreen", 0x90ee90},
  };
  return colors;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool parse_hex_color(const std::string& token, std::uint8_t* r, std::uint8_t* g, std::uint8_t* b) {
  if (token.empty() || token[0] != '#') return false;
  const std::string hex = token.substr(1);
  if (hex.size() == 3) {
    const int rr = hex_digit(hex[0]), gg = hex_digit(hex[1]), bb = hex_digit(hex[2]);
    if (rr < 0 || gg < 0 || bb < 0) return false;
    *r = static_cast<std::uint8_t>(rr * 17);
    *g = static_cast<std::uint8_t>(gg * 17);
    *b = static_cast<std::uint8_t>(bb * 17);
    return true;
  }
  if (hex.size() == 6 || hex.size() == 8) {
    int v[6];
    for (int i = 0; i < 6; ++i) {
      v[i] = hex_digit(hex[static_cast<std::size_t>(i)]);
      if (v[i] < 0) return false;
    }
    *r = static_cast<std::uint8_t>(v[0] * 16 + v[1]);
    *g = static_cast<std::uint8_t>(v[2] * 16 + v[3]);
    *b = static_cast<std::uint8_t>(v[4] * 16 + v[5]);
    return true;
  }
  return false;
}

bool parse_rgb_func(const std::string& text, std::size_t at, std::uint8_t* r, std::uint8_t* g,
                    std::uint8_t* b) {
  const std::size_t open = text.find('(', at);
  if (open == std::string::npos) return false;
  const std::size_t close = text.find(')', open);
  if (close == std::string::npos) return false;
  std::string inner = text.substr(open + 1, close - open - 1);
  std::replace(inner.begin(), inner.end(), ',', ' ');
  std::istringstream ss(inner);
  double rv, gv, bv;
  if (!(ss >> rv >> gv >> bv)) return false;
  *r = static_cast<std::uint8_t>(std::clamp(rv, 0.0, 255.0));
  *g = static_cast<std::uint8_t>(std::clamp(gv, 0.0, 255.0));
  *b = static_cast<std::uint8_t>(std::clamp(bv, 0.0, 255.0));
  return true;
}

}  // namespace

bool parse_css_color(const std::string& value, std::uint8_t* r, std::uint8_t* g,
                     std::uint8_t* b) {
  const std::string v = lower(trim(value));
  // Hash colors anywhere in the value (covers gradients and shorthands).
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == '#') {
      std::size_t end = i + 1;
      while (end < v.size() && hex_digit(v[end]) >= 0) ++end;
      if (parse_hex_color(v.substr(i, end - i), r, g, b)) return true;
    }
  }
  if (const std::size_t at = v.find("rgb"); at != std::string::npos) {
    if (parse_rgb_func(v, at, r, g, b)) return true;
  }
  // Named colors as standalone tokens.
  std::string token;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    const char c = i < v.size() ? v[i] : ' ';
    if (std::isalpha(static_cast<unsigned char>(c))) {
      token += c;
      continue;
    }
    if (!token.empty()) {
      auto it = named_colors().find(token);
      if (it != named_colors().end()) {
        *r = static_cast<std::uint8_t>(it->second >> 16);
        *g = static_cast<std::uint8_t>((it->second >> 8) & 0xff);
        *b = static_cast<std::uint8_t>(it->second & 0xff);
        return true;
      }
      token.clear();
    }
  }
  return false;
}

namespace {

// Minimal declaration block: key -> value, lowercased keys.
std::map<std::string, std::string> parse_decls(const std::string& block) {
  std::map<std::string, std::string> decls;
  std::size_t pos = 0;
  while (pos < block.size()) {
    const std::size_t semi = block.find(';', pos);
    const std::string decl =
        block.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    const std::size_t colon = decl.find(':');
    if (colon != std::string::npos) {
      decls[lower(trim(decl.substr(0, colon)))] = trim(decl.substr(colon + 1));
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return decls;
}

bool decl_color(const std::map<std::string, std::string>& decls, const char* key,
                std::uint8_t* r, std::uint8_t* g, std::uint8_t* b) {
  auto it = decls.find(key);
  return it != decls.end() && parse_css_color(it->second, r, g, b);
}

// Pixel length: "120px", "50%", bare number. Percent resolves against `ref`.
bool parse_px(const std::string& value, int ref, int* out) {
  const std::string v = trim(value);
  if (v.empty()) return false;
  char* end = nullptr;
  const double num = std::strtod(v.c_str(), &end);
  if (end == v.c_str()) return false;
  std::string unit = trim(end);
  if (unit == "%") {
    *out = static_cast<int>(num * ref / 100.0);
    return true;
  }
  if (unit.empty() || unit == "px") {
    *out = static_cast<int>(num);
    return true;
  }
  return false;
}

struct StyleRule {
  std::string selector;
  std::map<std::string, std::string> decls;
};

std::vector<StyleRule> parse_style_blocks(const std::string& html) {
  std::vector<StyleRule> rules;
  const std::string low = lower(html);
  std::size_t pos = 0;
  while ((pos = low.find("<style", pos)) != std::string::npos) {
    const std::size_t open = low.find('>', pos);
    if (open == std::string::npos) break;
    const std::size_t close = low.find("</style", open);
    const std::string css =
        html.substr(open + 1, close == std::string::npos ? std::string::npos : close - open - 1);
    std::size_t cpos = 0;
    while (cpos < css.size()) {
      const std::size_t brace = css.find('{', cpos);
      if (brace == std::string::npos) break;
      const std::size_t end = css.find('}', brace);
      if (end == std::string::npos) break;
      const std::string selectors = css.substr(cpos, brace - cpos);
      const auto decls = parse_decls(css.substr(brace + 1, end - brace - 1));
      std::size_t spos = 0;
      while (spos <= selectors.size()) {
        const std::size_t comma = selectors.find(',', spos);
        const std::string sel = lower(trim(selectors.substr(
            spos, comma == std::string::npos ? std::string::npos : comma - spos)));
        if (!sel.empty()) rules.push_back({sel, decls});
        if (comma == std::string::npos) break;
        spos = comma + 1;
      }
      cpos = end + 1;
    }
    if (close == std::string::npos) break;
    pos = close;
  }
  return rules;
}

// Finds the style attribute of the first <tag ...> occurrence.
std::string inline_style_of(const std::string& html, const std::string& tag) {
  const std::string low = lower(html);
  std::size_t pos = 0;
  while ((pos = low.find("<" + tag, pos)) != std::string::npos) {
    const char after = pos + tag.size() + 1 < low.size() ? low[pos + tag.size() + 1] : ' ';
    if (after != ' ' && after != '>' && after != '\t' && after != '\n') {
      ++pos;
      continue;
    }
    const std::size_t end = low.find('>', pos);
    if (end == std::string::npos) return "";
    const std::string tag_body = html.substr(pos, end - pos);
    const std::size_t style_at = lower(tag_body).find("style=");
    if (style_at == std::string::npos) return "";
    const char quote = tag_body[style_at + 6];
    if (quote != '"' && quote != '\'') return "";
    const std::size_t vend = tag_body.find(quote, style_at + 7);
    if (vend == std::string::npos) return "";
    return tag_body.substr(style_at + 7, vend - style_at - 7);
  }
  return "";
}

}  // namespace

Result<RenderResult> BuiltinRenderer::render(const fs::path& html_path, int width_px,
                                             int height_px) {
  std::ifstream in(html_path, std::ios::binary);
  if (!in) return Err("page load failed: " + html_path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string html = ss.str();

  RenderResult result;
  result.raster = img::RasterImage::solid(width_px, height_px, 255, 255, 255);
  result.text = util::html_to_text(html);

  // Page background: <style> body/html rules first, inline styles win.
  std::uint8_t r = 255, g = 255, b = 255;
  for (const auto& rule : parse_style_blocks(html)) {
    if (rule.selector != "body" && rule.selector != "html" && rule.selector != "*") continue;
    decl_color(rule.decls, "background-color", &r, &g, &b) ||
        decl_color(rule.decls, "background", &r, &g, &b);
  }
  for (const char* tag : {"html", "body"}) {
    const auto decls = parse_decls(inline_style_of(html, tag));
    decl_color(decls, "background-color", &r, &g, &b) ||
        decl_color(decls, "background", &r, &g, &b);
  }
  result.raster.fill(r, g, b);

  // Positioned boxes with explicit geometry and a background color.
  const std::string low = lower(html);
  std::size_t pos = 0;
  while ((pos = low.find("<div", pos)) != std::string::npos) {
    const std::size_t end = low.find('>', pos);
    if (end == std::string::npos) break;
    const std::string tag_body = html.substr(pos, end - pos);
    pos = end + 1;
    const std::size_t style_at = lower(tag_body).find("style=");
    if (style_at == std::string::npos) continue;
    const char quote = tag_body[style_at + 6];
    if (quote != '"' && quote != '\'') continue;
    const std::size_t vend = tag_body.find(quote, style_at + 7);
    if (vend == std::string::npos) continue;
    const auto decls = parse_decls(tag_body.substr(style_at + 7, vend - style_at - 7));

    std::uint8_t br = 0, bg = 0, bb = 0;
    if (!decl_color(decls, "background-color", &br, &bg, &bb) &&
        !decl_color(decls, "background", &br, &bg, &bb))
      continue;
    int w = 0, h = 0, x = 0, y = 0;
    auto get = [&](const char* key, int ref, int* out) {
      auto it = decls.find(key);
      return it != decls.end() && parse_px(it->second, ref, out);
    };
    if (!get("width", width_px, &w) || !get("height", height_px, &h)) continue;
    get("left", width_px, &x);
    get("top", height_px, &y);
    result.raster.fill_rect(x, y, w, h, br, bg, bb);
  }

  return result;
}

BrowserRenderer::BrowserRenderer(BrowserRendererConfig config) : config_(std::move(config)) {}

Result<RenderResult> BrowserRenderer::render(const fs::path& html_path, int width_px,
                                             int height_px) {
  if (config_.binary_path.empty() || !fs::exists(config_.binary_path))
    return Err("renderer binary not found: '" + config_.binary_path +
               "' (set renderer.binary_path or use the built-in renderer)");
  if (!fs::exists(html_path)) return Err("page load failed: " + html_path.string());

  const fs::path shot =
      fs::temp_directory_path() /
      ("deckhand_shot_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
       std::to_string(std::hash<std::string>{}(html_path.string())) + ".png");
  std::vector<std::string> argv{
      config_.binary_path,
      "--headless",
      "--disable-gpu",
      "--no-sandbox",
      "--hide-scrollbars",
      "--window-size=" + std::to_string(width_px) + "," + std::to_string(height_px),
      "--screenshot=" + shot.string(),
      "file://" + fs::absolute(html_path).string(),
  };
  auto run = util::run_process(argv, fs::temp_directory_path(), config_.timeout_ms, 64 * 1024);
  if (!run) return run.error();
  if (run.value().timed_out) return Err("page load timed out: " + html_path.string());

  std::ifstream in(shot, std::ios::binary);
  if (!in) return Err("renderer produced no screenshot (exit " +
                      std::to_string(run.value().exit_code) + ")");
  std::vector<std::uint8_t> png_bytes((std::istreambuf_iterator<char>(in)),
                                      std::istreambuf_iterator<char>());
  std::error_code ec;
  fs::remove(shot, ec);

  auto decoded = img::decode_png(png_bytes);
  if (!decoded) return decoded.error();

  RenderResult result;
  result.raster = decoded.take();
  std::ifstream page(html_path, std::ios::binary);
  std::ostringstream ss;
  ss << page.rdbuf();
  result.text = util::html_to_text(ss.str());
  return result;
}

RendererPool::RendererPool(std::shared_ptr<RendererClient> inner, int max_concurrent)
    : inner_(std::move(inner)), slots_(std::max(1, std::min(max_concurrent, 64))) {}

Result<RenderResult> RendererPool::render(const fs::path& html_path, int width_px,
                                          int height_px) {
  slots_.acquire();
  auto result = inner_->render(html_path, width_px, height_px);
  slots_.release();
  return result;
}

Result<SlideImage> inspect_slide(const fs::path& html_path, const AspectPreset& preset,
                                 RendererClient& renderer) {
  auto rendered = renderer.render(html_path, preset.width_px, preset.height_px);
  if (!rendered) return rendered.error();
  if (rendered.value().raster.width != preset.width_px ||
      rendered.value().raster.height != preset.height_px)
    return Err("renderer returned wrong viewport size");
  SlideImage image;
  image.width = preset.width_px;
  image.height = preset.height_px;
  image.png = img::encode_png(rendered.value().raster);
  image.source_path = html_path.string();
  if (image.png.empty()) return Err("png encoding failed");
  return image;
}

Result<std::vector<std::uint8_t>> print_to_pdf(const fs::path& html_path,
                                               const AspectPreset& preset,
                                               RendererClient& renderer) {
  auto rendered = renderer.render(html_path, preset.width_px, preset.height_px);
  if (!rendered) return rendered.error();
  pdf::PageSpec page;
  page.width_pt = px_to_pt(preset.width_px);
  page.height_pt = px_to_pt(preset.height_px);
  page.raster = std::move(rendered.value().raster);
  page.text = std::move(rendered.value().text);
  return pdf::write_pdf({std::move(page)});
}

}  // namespace deckhand::inspect
