#include "deckhand/pdf/writer.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstring>

namespace deckhand::pdf {

namespace {

std::string deflate_bytes(const std::uint8_t* data, std::size_t len) {
  uLongf bound = compressBound(static_cast<uLong>(len));
  std::string out(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound, data, static_cast<uLong>(len),
                Z_BEST_SPEED) != Z_OK)
    return {};
  out.resize(bound);
  return out;
}

std::string fmt_pt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// PDF literal strings accept only balanced parens; escape the specials and
// route any non-ASCII line through a hex string instead.
bool needs_hex(const std::string& line) {
  for (unsigned char c : line) {
    if (c >= 0x80 || c < 0x20) return true;
  }
  return false;
}

std::string pdf_string(const std::string& line) {
  if (needs_hex(line)) {
    static const char* digits = "0123456789abcdef";
    std::string out = "<";
    for (unsigned char c : line) {
      out += digits[c >> 4];
      out += digits[c & 0xf];
    }
    out += ">";
    return out;
  }
  std::string out = "(";
  for (char c : line) {
    if (c == '(' || c == ')' || c == '\\') out += '\\';
    out += c;
  }
  out += ")";
  return out;
}

std::vector<std::string> wrap_lines(const std::string& text, std::size_t max_bytes) {
  std::vector<std::string> lines;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n' || current.size() >= max_bytes) {
      // Never split inside a UTF-8 sequence.
      if (c != '\n' && (static_cast<unsigned char>(c) & 0xc0) == 0x80) {
        current += c;
        continue;
      }
      if (!current.empty()) lines.push_back(current);
      current.clear();
      if (c == '\n') continue;
    }
    if (c != '\r') current += c;
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

std::vector<std::uint8_t> write_pdf(const std::vector<PageSpec>& pages) {
  // Object layout: 1 Catalog, 2 Pages, 3 Font, then per page in order:
  // [image], content, page.
  struct Obj {
    int number;
    std::string body;  // everything between "N 0 obj" and "endobj"
  };
  std::vector<Obj> objects;
  int next = 4;

  std::string kids;
  std::vector<std::string> page_objs;

  for (const auto& page : pages) {
    std::string resources = "<< /Font << /F1 3 0 R >>";
    int image_obj = 0;
    if (page.raster && page.raster->width > 0) {
      image_obj = next++;
      const std::string data =
          deflate_bytes(page.raster->rgb.data(), page.raster->rgb.size());
      std::string body = "<< /Type /XObject /Subtype /Image /Width " +
                         std::to_string(page.raster->width) + " /Height " +
                         std::to_string(page.raster->height) +
                         " /ColorSpace /DeviceRGB /BitsPerComponent 8 /Filter /FlateDecode"
                         " /Length " +
                         std::to_string(data.size()) + " >>\nstream\n" + data + "\nendstream";
      objects.push_back({image_obj, std::move(body)});
      resources += " /XObject << /Im0 " + std::to_string(image_obj) + " 0 R >>";
    }
    resources += " >>";

    std::string content;
    if (image_obj != 0) {
      content += "q\n" + fmt_pt(page.width_pt) + " 0 0 " + fmt_pt(page.height_pt) +
                 " 0 0 cm\n/Im0 Do\nQ\n";
    }
    const auto lines = wrap_lines(page.text, 120);
    if (!lines.empty()) {
      content += "BT\n/F1 10 Tf\n";
      if (image_obj != 0) content += "3 Tr\n";  // invisible text layer over the raster
      content += fmt_pt(8) + " " + fmt_pt(page.height_pt - 16) + " Td\n";
      bool first = true;
      for (const auto& line : lines) {
        if (!first) content += "0 -12 Td\n";
        content += pdf_string(line) + " Tj\n";
        first = false;
      }
      content += "ET\n";
    }

    const std::string deflated =
        deflate_bytes(reinterpret_cast<const std::uint8_t*>(content.data()), content.size());
    const int content_obj = next++;
    objects.push_back({content_obj, "<< /Filter /FlateDecode /Length " +
                                        std::to_string(deflated.size()) + " >>\nstream\n" +
                                        deflated + "\nendstream"});

    const int page_obj = next++;
    objects.push_back({page_obj, "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 " +
                                     fmt_pt(page.width_pt) + " " + fmt_pt(page.height_pt) +
                                     "] /Resources " + resources + " /Contents " +
                                     std::to_string(content_obj) + " 0 R >>"});
    kids += std::to_string(page_obj) + " 0 R ";
  }

  std::vector<Obj> head;
  head.push_back({1, "<< /Type /Catalog /Pages 2 0 R >>"});
  head.push_back({2, "<< /Type /Pages /Kids [" + kids + "] /Count " +
                         std::to_string(pages.size()) + " >>"});
  head.push_back({3, "<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>"});
  objects.insert(objects.begin(), head.begin(), head.end());

  std::string out = "%PDF-1.4\n%\xe2\xe3\xcf\xd3\n";
  const int total = next;
  std::vector<std::size_t> offsets(static_cast<std::size_t>(total), 0);
  for (const auto& obj : objects) {
    offsets[static_cast<std::size_t>(obj.number)] = out.size();
    out += std::to_string(obj.number) + " 0 obj\n" + obj.body + "\nendobj\n";
  }

  const std::size_t xref_at = out.size();
  out += "xref\n0 " + std::to_string(total) + "\n";
  out += "0000000000 65535 f \n";
  for (int i = 1; i < total; ++i) {
    char line[32];
    std::snprintf(line, sizeof(line), "%010zu 00000 n \n", offsets[static_cast<std::size_t>(i)]);
    out += line;
  }
  out += "trailer\n<< /Size " + std::to_string(total) +
         " /Root 1 0 R >>\nstartxref\n" + std::to_string(xref_at) + "\n%%EOF\n";

  return std::vector<std::uint8_t>(out.begin(), out.end());
}

}  // namespace deckhand::pdf
