#include "deckhand/inspect/markdown.hpp"

#include <algorithm>

namespace deckhand::inspect {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string strip_cr(const std::string& line) {
  if (!line.empty() && line.back() == '\r') return line.substr(0, line.size() - 1);
  return line;
}

bool is_fence(const std::string& line) {
  const std::string t = strip_cr(line);
  return t.rfind("```", 0) == 0 || t.rfind("~~~", 0) == 0;
}

bool is_separator(const std::string& line) { return strip_cr(line) == "---"; }

bool all_whitespace(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

}  // namespace

Result<std::vector<std::string>> split_slides(const std::string& manuscript) {
  if (all_whitespace(manuscript)) return Err("manuscript is empty");

  std::vector<std::string> blocks;
  std::string current;
  bool first_line_of_block = true;
  bool in_fence = false;

  for (const auto& line : split_lines(manuscript)) {
    if (!in_fence && is_separator(line)) {
      blocks.push_back(current);
      current.clear();
      first_line_of_block = true;
      continue;
    }
    if (is_fence(line)) in_fence = !in_fence;
    if (!first_line_of_block) current += '\n';
    current += line;
    first_line_of_block = false;
  }
  blocks.push_back(current);
  return blocks;
}

std::vector<ImageRef> scan_images(const std::vector<std::string>& slides) {
  std::vector<ImageRef> refs;
  for (std::size_t slide = 0; slide < slides.size(); ++slide) {
    const std::string& text = slides[slide];
    std::size_t pos = 0;
    while ((pos = text.find("![", pos)) != std::string::npos) {
      const std::size_t alt_end = text.find(']', pos + 2);
      if (alt_end == std::string::npos) break;
      if (alt_end + 1 >= text.size() || text[alt_end + 1] != '(') {
        pos = alt_end + 1;
        continue;
      }
      const std::size_t target_end = text.find(')', alt_end + 2);
      if (target_end == std::string::npos) break;
      ImageRef ref;
      ref.alt = text.substr(pos + 2, alt_end - pos - 2);
      ref.target = text.substr(alt_end + 2, target_end - alt_end - 2);
      // Strip an optional markdown title: (path "title")
      const std::size_t space = ref.target.find(' ');
      if (space != std::string::npos) ref.target = ref.target.substr(0, space);
      ref.slide_index = static_cast<int>(slide);
      refs.push_back(std::move(ref));
      pos = target_end + 1;
    }
  }
  return refs;
}

}  // namespace deckhand::inspect
