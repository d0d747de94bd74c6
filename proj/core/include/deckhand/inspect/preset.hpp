#pragma once

#include <optional>
#include <string>
#include <vector>

namespace deckhand::inspect {

/// Named slide geometry: render pixels plus the width:height ratio that
/// constraint checking validates against. The poster check target is the ISO
/// A-series ratio; its pixel grid approximates A1 portrait.
struct AspectPreset {
  std::string name;
  int width_px = 0;
  int height_px = 0;
  double target_ratio = 0.0;  // width / height
};

const AspectPreset& widescreen_16_9();
const AspectPreset& standard_4_3();
const AspectPreset& poster_a1();

const std::vector<AspectPreset>& all_presets();
std::optional<AspectPreset> preset_by_name(const std::string& name);

/// PDF page size in points for a preset (CSS px at 96 dpi -> pt at 72 dpi).
double px_to_pt(int px);

}  // namespace deckhand::inspect
