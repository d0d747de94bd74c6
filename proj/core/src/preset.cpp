#include "deckhand/inspect/preset.hpp"

#include <cmath>

namespace deckhand::inspect {

const AspectPreset& widescreen_16_9() {
  static const AspectPreset p{"widescreen_16_9", 1280, 720, 16.0 / 9.0};
  return p;
}

const AspectPreset& standard_4_3() {
  static const AspectPreset p{"standard_4_3", 1024, 768, 4.0 / 3.0};
  return p;
}

const AspectPreset& poster_a1() {
  // A1 portrait at ~72 dpi equivalent; check target is 1/sqrt(2).
  static const AspectPreset p{"poster_a1", 1684, 2384, 1.0 / std::sqrt(2.0)};
  return p;
}

const std::vector<AspectPreset>& all_presets() {
  static const std::vector<AspectPreset> presets{widescreen_16_9(), standard_4_3(), poster_a1()};
  return presets;
}

std::optional<AspectPreset> preset_by_name(const std::string& name) {
  for (const auto& p : all_presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

double px_to_pt(int px) { return px * 72.0 / 96.0; }

}  // namespace deckhand::inspect
