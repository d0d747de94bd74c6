#include "deckhand/inspect/language.hpp"

#include <cstdint>

namespace deckhand::inspect {

std::string to_string(Language lang) {
  switch (lang) {
    case Language::kEnglish: return "en";
    case Language::kChinese: return "zh";
    case Language::kUnknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Decodes one UTF-8 code point at `i`, advancing it. Invalid bytes decode as
// U+FFFD and advance by one.
std::uint32_t decode_utf8(const std::string& s, std::size_t& i) {
  const unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) {
    ++i;
    return c;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((c & 0xe0) == 0xc0) {
    len = 2;
    cp = c & 0x1f;
  } else if ((c & 0xf0) == 0xe0) {
    len = 3;
    cp = c & 0x0f;
  } else if ((c & 0xf8) == 0xf0) {
    len = 4;
    cp = c & 0x07;
  } else {
    ++i;
    return 0xfffd;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xfffd;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char cont = static_cast<unsigned char>(s[i + k]);
    if ((cont & 0xc0) != 0x80) {
      ++i;
      return 0xfffd;
    }
    cp = (cp << 6) | (cont & 0x3f);
  }
  i += len;
  return cp;
}

bool is_cjk(std::uint32_t cp) {
  return (cp >= 0x3400 && cp <= 0x4dbf) ||    // CJK Extension A
         (cp >= 0x4e00 && cp <= 0x9fff) ||    // CJK Unified Ideographs
         (cp >= 0xf900 && cp <= 0xfaff) ||    // CJK Compatibility Ideographs
         (cp >= 0x3040 && cp <= 0x30ff) ||    // Kana
         (cp >= 0x20000 && cp <= 0x2a6df);    // CJK Extension B
}

bool is_letter(std::uint32_t cp) {
  if (is_cjk(cp)) return true;
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xc0 && cp <= 0xff && cp != 0xd7 && cp != 0xf7) return true;  // Latin-1 letters
  if (cp >= 0x100 && cp <= 0x24f) return true;                            // Latin Extended
  if (cp >= 0x370 && cp <= 0x3ff) return true;                            // Greek
  if (cp >= 0x400 && cp <= 0x4ff) return true;                            // Cyrillic
  if (cp >= 0xac00 && cp <= 0xd7af) return true;                          // Hangul
  return false;
}

struct LetterCounts {
  long long letters = 0;
  long long cjk = 0;
};

LetterCounts count_letters(const std::string& text) {
  LetterCounts counts;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::uint32_t cp = decode_utf8(text, i);
    if (!is_letter(cp)) continue;
    ++counts.letters;
    if (is_cjk(cp)) ++counts.cjk;
  }
  return counts;
}

constexpr double kCjkThreshold = 0.30;

}  // namespace

double cjk_letter_fraction(const std::string& text) {
  const LetterCounts counts = count_letters(text);
  if (counts.letters == 0) return 0.0;
  return static_cast<double>(counts.cjk) / static_cast<double>(counts.letters);
}

Language detect_language(const std::string& text) {
  const LetterCounts counts = count_letters(text);
  if (counts.letters == 0) return Language::kUnknown;
  const double fraction = static_cast<double>(counts.cjk) / static_cast<double>(counts.letters);
  return fraction >= kCjkThreshold ? Language::kChinese : Language::kEnglish;
}

bool is_valid_utf8(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    int len;
    if (c < 0x80) {
      len = 1;
    } else if ((c & 0xe0) == 0xc0 && c >= 0xc2) {
      len = 2;
    } else if ((c & 0xf0) == 0xe0) {
      len = 3;
    } else if ((c & 0xf8) == 0xf0 && c <= 0xf4) {
      len = 4;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xc0) != 0x80) return false;
    }
    i += len;
  }
  return true;
}

}  // namespace deckhand::inspect
