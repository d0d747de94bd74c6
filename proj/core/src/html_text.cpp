#include "deckhand/util/html_text.hpp"

#include <algorithm>
#include <cctype>

namespace deckhand::util {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string decode_entities(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out += text[i++];
      continue;
    }
    const std::size_t semi = text.find(';', i);
    if (semi == std::string::npos || semi - i > 8) {
      out += text[i++];
      continue;
    }
    const std::string entity = text.substr(i + 1, semi - i - 1);
    if (entity == "amp") out += '&';
    else if (entity == "lt") out += '<';
    else if (entity == "gt") out += '>';
    else if (entity == "quot") out += '"';
    else if (entity == "apos" || entity == "#39") out += '\'';
    else if (entity == "nbsp") out += ' ';
    else if (!entity.empty() && entity[0] == '#') {
      const long cp = std::strtol(entity.c_str() + 1, nullptr, entity.size() > 1 && entity[1] == 'x' ? 16 : 10);
      if (cp > 0 && cp < 128) out += static_cast<char>(cp);
      else out += '?';
    } else {
      out += text.substr(i, semi - i + 1);
    }
    i = semi + 1;
  }
  return out;
}

// Extracts an attribute value from a raw tag body.
std::string attr_value(const std::string& tag, const std::string& name) {
  const std::string low = lower(tag);
  std::size_t pos = 0;
  while ((pos = low.find(name, pos)) != std::string::npos) {
    std::size_t p = pos + name.size();
    while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
    if (p >= tag.size() || tag[p] != '=') {
      pos = p;
      continue;
    }
    ++p;
    while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
    if (p < tag.size() && (tag[p] == '"' || tag[p] == '\'')) {
      const char quote = tag[p];
      const std::size_t end = tag.find(quote, p + 1);
      if (end == std::string::npos) return "";
      return tag.substr(p + 1, end - p - 1);
    }
    std::size_t end = p;
    while (end < tag.size() && !std::isspace(static_cast<unsigned char>(tag[end]))) ++end;
    return tag.substr(p, end - p);
  }
  return "";
}

bool is_block_tag(const std::string& name) {
  static const char* kBlocks[] = {"p", "div", "br", "li", "tr", "h1", "h2", "h3",
                                  "h4", "h5", "h6", "ul", "ol", "table", "section", "article"};
  for (const char* b : kBlocks) {
    if (name == b) return true;
  }
  return false;
}

}  // namespace

std::string html_to_text(const std::string& html) {
  std::string out;
  out.reserve(html.size() / 2);
  std::size_t i = 0;
  bool skipping = false;          // inside script/style/head
  std::string skip_until;         // closing tag name that ends the skip
  std::string pending_href;

  while (i < html.size()) {
    if (html[i] == '<') {
      const std::size_t end = html.find('>', i);
      if (end == std::string::npos) break;
      std::string tag = html.substr(i + 1, end - i - 1);
      i = end + 1;
      if (tag.empty()) continue;
      if (tag[0] == '!' || tag[0] == '?') continue;  // comments, doctype

      const bool closing = tag[0] == '/';
      std::string name;
      for (std::size_t k = closing ? 1 : 0; k < tag.size(); ++k) {
        if (std::isspace(static_cast<unsigned char>(tag[k])) || tag[k] == '/') break;
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(tag[k])));
      }

      if (skipping) {
        if (closing && name == skip_until) skipping = false;
        continue;
      }
      if (!closing && (name == "script" || name == "style")) {
        skipping = true;
        skip_until = name;
        continue;
      }
      if (!closing && name == "a") {
        pending_href = attr_value(tag, "href");
      } else if (closing && name == "a") {
        if (!pending_href.empty()) {
          out += " (" + pending_href + ")";
          pending_href.clear();
        }
      }
      if (is_block_tag(name) && !out.empty() && out.back() != '\n') out += '\n';
      continue;
    }
    if (skipping) {
      ++i;
      continue;
    }
    const std::size_t next_tag = html.find('<', i);
    const std::size_t chunk_end = next_tag == std::string::npos ? html.size() : next_tag;
    out += decode_entities(html.substr(i, chunk_end - i));
    i = chunk_end;
  }

  // Collapse runs of blanks, then runs of newlines.
  std::string collapsed;
  collapsed.reserve(out.size());
  int newline_run = 0;
  bool space_run = false;
  for (char c : out) {
    if (c == '\n') {
      if (++newline_run <= 2) collapsed += '\n';
      space_run = false;
      continue;
    }
    newline_run = 0;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!space_run && !collapsed.empty() && collapsed.back() != '\n') collapsed += ' ';
      space_run = true;
      continue;
    }
    space_run = false;
    collapsed += c;
  }
  // Trim leading/trailing whitespace.
  const std::size_t first = collapsed.find_first_not_of(" \n");
  const std::size_t last = collapsed.find_last_not_of(" \n");
  if (first == std::string::npos) return "";
  return collapsed.substr(first, last - first + 1);
}

std::string html_to_text_capped(const std::string& html, std::size_t cap, bool* truncated) {
  std::string text = html_to_text(html);
  if (truncated) *truncated = false;
  if (text.size() <= cap) return text;
  // Cut on a UTF-8 boundary.
  std::size_t cut = cap;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xc0) == 0x80) --cut;
  text.resize(cut);
  text += "\n[truncated]";
  if (truncated) *truncated = true;
  return text;
}

}  // namespace deckhand::util
