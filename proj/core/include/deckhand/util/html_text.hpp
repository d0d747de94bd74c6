#pragma once

#include <string>

namespace deckhand::util {

/// Extracts readable text from HTML: tags stripped, script/style dropped,
/// anchors preserved as "text (href)", common entities decoded, blank runs
/// collapsed.
std::string html_to_text(const std::string& html);

/// html_to_text plus a length cap; appends a truncation marker when cut.
std::string html_to_text_capped(const std::string& html, std::size_t cap, bool* truncated = nullptr);

}  // namespace deckhand::util
