#include "deckhand/verify/constraint.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "deckhand/inspect/preset.hpp"

namespace deckhand::verify {

json to_json(const ConstraintSpec& spec) {
  json j = json::object();
  if (spec.slide_count)
    j["slide_count"] = json{{"lo", spec.slide_count->lo}, {"hi", spec.slide_count->hi}};
  if (spec.language) j["language"] = inspect::to_string(*spec.language);
  if (spec.aspect) j["aspect"] = *spec.aspect;
  return j;
}

ConstraintSpec constraint_spec_from_json(const json& j) {
  ConstraintSpec spec;
  if (j.contains("slide_count")) {
    const auto& sc = j.at("slide_count");
    if (sc.is_number()) {
      const int n = sc.get<int>();
      spec.slide_count = SlideCountRange{n, n};
    } else if (sc.is_object()) {
      spec.slide_count = SlideCountRange{sc.value("lo", 1), sc.value("hi", 1)};
    }
  }
  if (j.contains("language") && j.at("language").is_string()) {
    const std::string lang = j.at("language").get<std::string>();
    if (lang == "zh") spec.language = inspect::Language::kChinese;
    else if (lang == "en") spec.language = inspect::Language::kEnglish;
  }
  if (j.contains("aspect") && j.at("aspect").is_string())
    spec.aspect = j.at("aspect").get<std::string>();
  return spec;
}

std::string describe(const ConstraintSpec& spec) {
  if (spec.free()) return "free (no constraints)";
  std::string out;
  auto add = [&out](const std::string& piece) {
    if (!out.empty()) out += "; ";
    out += piece;
  };
  if (spec.slide_count) {
    if (spec.slide_count->lo == spec.slide_count->hi)
      add("exactly " + std::to_string(spec.slide_count->lo) + " slides");
    else
      add(std::to_string(spec.slide_count->lo) + "-" + std::to_string(spec.slide_count->hi) +
          " slides");
  }
  if (spec.language) add("language " + inspect::to_string(*spec.language));
  if (spec.aspect) add("aspect " + *spec.aspect);
  return out;
}

std::string ConstraintReport::render() const {
  std::ostringstream out;
  char line[160];
  out << "Constraint report\n";
  if (checks.empty()) {
    out << "  (no constraints specified)\n";
  }
  for (const auto& c : checks) {
    std::snprintf(line, sizeof(line), "  %-12s expected %-22s observed %-22s %s\n",
                  c.dimension.c_str(), c.expected.c_str(), c.observed.c_str(),
                  c.pass ? "PASS" : "FAIL");
    out << line;
  }
  std::snprintf(line, sizeof(line), "  satisfied %.4f  score %.2f / 5\n", satisfied_fraction,
                scaled_score);
  out << line;
  return out.str();
}

json to_json(const ConstraintReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"dimension", c.dimension},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"pass", c.pass}});
  }
  return json{{"checks", checks},
              {"satisfied_fraction", report.satisfied_fraction},
              {"scaled_score", report.scaled_score}};
}

AspectCheck check_aspect(const PdfSummary& summary, const std::string& preset_name) {
  AspectCheck check;
  const auto preset = inspect::preset_by_name(preset_name);
  if (!preset || summary.first_page_height_pt <= 0) return check;
  check.target_ratio = preset->target_ratio;
  check.observed_ratio = summary.first_page_width_pt / summary.first_page_height_pt;

  constexpr double kTolerance = 0.01;
  auto within = [&](double target) {
    return std::abs(check.observed_ratio - target) / target <= kTolerance;
  };
  check.pass = within(check.target_ratio);
  if (!check.pass && preset_name == "poster_a1") {
    // Posters are orientation-agnostic: accept the reciprocal ratio too.
    check.pass = within(1.0 / check.target_ratio);
  }
  return check;
}

ConstraintReport check_constraints(const ConstraintSpec& spec, const PdfSummary& summary) {
  ConstraintReport report;
  char buf[64];

  if (spec.slide_count) {
    ConstraintCheck c;
    c.dimension = "slide_count";
    c.expected = spec.slide_count->lo == spec.slide_count->hi
                     ? std::to_string(spec.slide_count->lo)
                     : std::to_string(spec.slide_count->lo) + "-" +
                           std::to_string(spec.slide_count->hi);
    c.observed = std::to_string(summary.page_count);
    c.pass = summary.page_count >= spec.slide_count->lo &&
             summary.page_count <= spec.slide_count->hi;
    report.checks.push_back(std::move(c));
  }

  if (spec.language) {
    ConstraintCheck c;
    c.dimension = "language";
    c.expected = inspect::to_string(*spec.language);
    const bool no_text = summary.text.find_first_not_of(" \t\r\n") == std::string::npos;
    if (no_text) {
      c.observed = "no_text";
      c.pass = false;
    } else {
      const auto detected = inspect::detect_language(summary.text);
      c.observed = inspect::to_string(detected);
      c.pass = detected == *spec.language;
    }
    report.checks.push_back(std::move(c));
  }

  if (spec.aspect) {
    ConstraintCheck c;
    c.dimension = "aspect";
    const AspectCheck aspect = check_aspect(summary, *spec.aspect);
    std::snprintf(buf, sizeof(buf), "%s (%.4f)", spec.aspect->c_str(), aspect.target_ratio);
    c.expected = buf;
    std::snprintf(buf, sizeof(buf), "%.4f", aspect.observed_ratio);
    c.observed = buf;
    c.pass = aspect.pass;
    report.checks.push_back(std::move(c));
  }

  if (report.checks.empty()) {
    report.satisfied_fraction = 1.0;  // a free spec is vacuously satisfied
  } else {
    int passes = 0;
    for (const auto& c : report.checks) passes += c.pass ? 1 : 0;
    report.satisfied_fraction = static_cast<double>(passes) / report.checks.size();
  }
  report.scaled_score = 5.0 * report.satisfied_fraction;
  return report;
}

}  // namespace deckhand::verify
