#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deckhand/inspect/language.hpp"
#include "deckhand/verify/pdf_summary.hpp"

namespace deckhand::verify {

using json = nlohmann::json;

struct SlideCountRange {
  int lo = 1;
  int hi = 1;
};

/// Verifiable task constraints; every dimension is optional ("Free" when all
/// are absent).
struct ConstraintSpec {
  std::optional<SlideCountRange> slide_count;
  std::optional<inspect::Language> language;
  std::optional<std::string> aspect;  // preset name

  bool free() const { return !slide_count && !language && !aspect; }
};

json to_json(const ConstraintSpec& spec);
ConstraintSpec constraint_spec_from_json(const json& j);

/// A human-readable summary, e.g. "slides 4-6; language zh; aspect 16:9".
std::string describe(const ConstraintSpec& spec);

struct ConstraintCheck {
  std::string dimension;  // slide_count | language | aspect
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  double satisfied_fraction = 1.0;  // passes / total; vacuous spec scores 1
  double scaled_score = 5.0;        // 5 x fraction

  bool all_pass() const { return satisfied_fraction >= 1.0; }
  std::string render() const;
};

json to_json(const ConstraintReport& report);

struct AspectCheck {
  bool pass = false;
  double observed_ratio = 0.0;
  double target_ratio = 0.0;
};

/// Ratio match within 1%; the poster preset accepts either orientation.
AspectCheck check_aspect(const PdfSummary& summary, const std::string& preset_name);

ConstraintReport check_constraints(const ConstraintSpec& spec, const PdfSummary& summary);

}  // namespace deckhand::verify
