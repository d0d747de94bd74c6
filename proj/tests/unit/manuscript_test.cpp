#include <doctest.h>

#include "../support/fixtures.hpp"
#include "deckhand/inspect/manuscript.hpp"

using namespace deckhand;
using inspect::FindingKind;

namespace {

int count_kind(const inspect::ManuscriptDiagnostics& diag, FindingKind kind) {
  int n = 0;
  for (const auto& f : diag.image_findings) {
    if (f.kind == kind) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("manuscript") {
  TEST_CASE("clean three-slide manuscript has no findings") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "assets/chart.png", "png-ish");
    fixtures::write_file(dir.path() / "manuscript.md",
                         "# One\n![cost chart](assets/chart.png)\n---\n# Two\nbody\n---\n# Three");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    CHECK(diag.value().slide_count == 3);
    CHECK(diag.value().detected_language == inspect::Language::kEnglish);
    CHECK(diag.value().image_findings.empty());
  }

  TEST_CASE("external image URLs are flagged") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "manuscript.md",
                         "# S\n![x](https://example.com/x.png)");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    CHECK(count_kind(diag.value(), FindingKind::kExternalUrl) == 1);
    CHECK(count_kind(diag.value(), FindingKind::kMissingPath) == 0);
  }

  TEST_CASE("nonexistent local paths are flagged") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "manuscript.md", "# S\n![x](assets/ghost.png)");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    CHECK(count_kind(diag.value(), FindingKind::kMissingPath) == 1);
  }

  TEST_CASE("empty alt text is flagged") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "assets/a.png", "x");
    fixtures::write_file(dir.path() / "manuscript.md", "# S\n![](assets/a.png)");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    CHECK(count_kind(diag.value(), FindingKind::kMissingAlt) == 1);
  }

  TEST_CASE("an asset reused across slides yields one finding listing both") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "assets/chart.png", "x");
    fixtures::write_file(dir.path() / "manuscript.md",
                         "# One\n![c](assets/chart.png)\n---\n# Two\n---\n# Three\n"
                         "![c again](assets/chart.png)");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    REQUIRE(count_kind(diag.value(), FindingKind::kDuplicateUse) == 1);
    for (const auto& f : diag.value().image_findings) {
      if (f.kind != FindingKind::kDuplicateUse) continue;
      CHECK(f.slide_index == 0);
      CHECK(f.detail.find("1 and 3") != std::string::npos);
    }
  }

  TEST_CASE("the same asset twice on one slide is not a duplicate finding") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "assets/a.png", "x");
    fixtures::write_file(dir.path() / "manuscript.md",
                         "# S\n![a](assets/a.png) ![b](assets/a.png)");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    CHECK(count_kind(diag.value(), FindingKind::kDuplicateUse) == 0);
  }

  TEST_CASE("every finding cites a slide before the count") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "manuscript.md",
                         "![](ghost1.png)\n---\n![](https://x/y.png)\n---\nclean");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("manuscript.md", ws);
    REQUIRE(diag.ok());
    for (const auto& f : diag.value().image_findings) {
      CHECK(f.slide_index >= 0);
      CHECK(f.slide_index < diag.value().slide_count);
    }
  }

  TEST_CASE("missing files and non-utf8 content are errors") {
    fixtures::TempDir dir{"ms"};
    tools::Workspace ws(dir.path());
    CHECK_FALSE(inspect::inspect_manuscript("ghost.md", ws).ok());
    fixtures::write_file(dir.path() / "bad.md", std::string("latin1 caf\xe9 text"));
    CHECK_FALSE(inspect::inspect_manuscript("bad.md", ws).ok());
  }

  TEST_CASE("chinese manuscripts detect zh") {
    fixtures::TempDir dir{"ms"};
    fixtures::write_file(dir.path() / "m.md", "# 封面\n可再生能源概述\n---\n# 结论\n数据支持");
    tools::Workspace ws(dir.path());
    auto diag = inspect::inspect_manuscript("m.md", ws);
    REQUIRE(diag.ok());
    CHECK(diag.value().slide_count == 2);
    CHECK(diag.value().detected_language == inspect::Language::kChinese);
  }
}
