#pragma once

#include <string>

namespace deckhand::inspect {

enum class Language { kEnglish, kChinese, kUnknown };

std::string to_string(Language lang);

/// Classifies UTF-8 text by the fraction of CJK ideographs among all
/// letter-class characters: >= 0.30 is Chinese, anything else with at least
/// one letter is English, no letters is unknown.
Language detect_language(const std::string& text);

/// CJK fraction the classifier decides on; exposed for diagnostics.
double cjk_letter_fraction(const std::string& text);

bool is_valid_utf8(const std::string& text);

}  // namespace deckhand::inspect
