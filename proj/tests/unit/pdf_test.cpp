#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "deckhand/inspect/language.hpp"
#include "deckhand/pdf/writer.hpp"
#include "deckhand/verify/pdf_summary.hpp"

using namespace deckhand;

namespace {

// Hand-written single-page document, independent of the library writer.
const char* kReferenceBlankPdf =
    "%PDF-1.4\n"
    "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
    "2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 /MediaBox [0 0 612 792] >> endobj\n"
    "3 0 obj << /Type /Page /Parent 2 0 R >> endobj\n"
    "trailer << /Size 4 /Root 1 0 R >>\n"
    "%%EOF\n";

pdf::PageSpec text_page(double w, double h, const std::string& text) {
  pdf::PageSpec page;
  page.width_pt = w;
  page.height_pt = h;
  page.text = text;
  return page;
}

}  // namespace

TEST_SUITE("pdf") {
  TEST_CASE("written decks summarize with exact page counts and dimensions") {
    std::vector<pdf::PageSpec> pages;
    for (int i = 1; i <= 3; ++i)
      pages.push_back(text_page(960, 540, "Page " + std::to_string(i) + " of the deck."));
    pages[0].raster = img::RasterImage::solid(64, 36, 200, 10, 10);
    const auto bytes = pdf::write_pdf(pages);
    auto summary = verify::summarize_pdf(bytes);
    REQUIRE(summary.ok());
    CHECK(summary.value().page_count == 3);
    CHECK(summary.value().first_page_width_pt == doctest::Approx(960.0));
    CHECK(summary.value().first_page_height_pt == doctest::Approx(540.0));
    CHECK(summary.value().text.find("Page 1 of the deck.") != std::string::npos);
    CHECK(summary.value().text.find("Page 3 of the deck.") != std::string::npos);
  }

  TEST_CASE("chinese text survives the write/extract round trip") {
    const auto bytes =
        pdf::write_pdf({text_page(960, 540, "第1页：可再生能源的发展与市场机会分析")});
    auto summary = verify::summarize_pdf(bytes);
    REQUIRE(summary.ok());
    CHECK(summary.value().text.find("可再生能源") != std::string::npos);
    CHECK(inspect::detect_language(summary.value().text) == inspect::Language::kChinese);
  }

  TEST_CASE("a reference blank single page parses with empty text") {
    const std::string raw = kReferenceBlankPdf;
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE(summary.ok());
    CHECK(summary.value().page_count == 1);
    CHECK(summary.value().first_page_width_pt == doctest::Approx(612.0));
    CHECK(summary.value().first_page_height_pt == doctest::Approx(792.0));
    CHECK(summary.value().text.find_first_not_of(" \n") == std::string::npos);
  }

  TEST_CASE("media boxes inherit from the pages node") {
    // The reference document keeps MediaBox on the Pages node only.
    const std::string raw = kReferenceBlankPdf;
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE(summary.ok());
    CHECK(summary.value().first_page_width_pt == doctest::Approx(612.0));
  }

  TEST_CASE("truncation is a parse error") {
    const auto bytes = pdf::write_pdf({text_page(960, 540, "x"), text_page(960, 540, "y")});
    std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + bytes.size() / 3);
    CHECK_FALSE(verify::summarize_pdf(cut).ok());
  }

  TEST_CASE("garbage and empty files are parse errors") {
    std::vector<std::uint8_t> junk{'n', 'o', 't', ' ', 'a', ' ', 'p', 'd', 'f'};
    CHECK_FALSE(verify::summarize_pdf(junk).ok());
    CHECK_FALSE(verify::summarize_pdf(std::vector<std::uint8_t>{}).ok());
  }

  TEST_CASE("encrypted documents are rejected") {
    const std::string raw =
        "%PDF-1.4\n"
        "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        "2 0 obj << /Type /Pages /Kids [] /Count 0 >> endobj\n"
        "trailer << /Size 3 /Root 1 0 R /Encrypt 9 0 R >>\n%%EOF\n";
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE_FALSE(summary.ok());
    CHECK(summary.error().message.find("encrypted") != std::string::npos);
  }

  TEST_CASE("literal string escapes decode in text extraction") {
    const std::string raw =
        "%PDF-1.4\n"
        "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        "2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 /MediaBox [0 0 100 100] >> endobj\n"
        "3 0 obj << /Type /Page /Parent 2 0 R /Contents 4 0 R >> endobj\n"
        "4 0 obj << /Length 52 >>\nstream\n"
        "BT (paren \\( pair \\)) Tj (tab\\tend) Tj ET\n"
        "endstream endobj\n"
        "trailer << /Size 5 /Root 1 0 R >>\n%%EOF\n";
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE(summary.ok());
    CHECK(summary.value().text.find("paren ( pair )") != std::string::npos);
    CHECK(summary.value().text.find("tab\tend") != std::string::npos);
  }

  TEST_CASE("TJ arrays contribute their string elements") {
    const std::string raw =
        "%PDF-1.4\n"
        "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        "2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 /MediaBox [0 0 100 100] >> endobj\n"
        "3 0 obj << /Type /Page /Parent 2 0 R /Contents 4 0 R >> endobj\n"
        "4 0 obj << /Length 40 >>\nstream\n"
        "BT [(Hel) -20 (lo) 5 ( world)] TJ ET\n"
        "endstream endobj\n"
        "trailer << /Size 5 /Root 1 0 R >>\n%%EOF\n";
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE(summary.ok());
    CHECK(summary.value().text.find("Hello world") != std::string::npos);
  }

  TEST_CASE("ascii85-wrapped content streams decode") {
    // "BT (chained filters work) Tj ET" through ASCII85 with the adobe
    // delimiters (a common writer combination for content streams).
    const std::string a85 = "6<#'U@q]:bDIm?$Anc('ATDi7GAhM;.3MT)+@T6~>";
    const std::string raw =
        "%PDF-1.4\n"
        "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        "2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 /MediaBox [0 0 100 100] >> endobj\n"
        "3 0 obj << /Type /Page /Parent 2 0 R /Contents 4 0 R >> endobj\n"
        "4 0 obj << /Filter /ASCII85Decode /Length " +
        std::to_string(a85.size()) + " >>\nstream\n" + a85 +
        "\nendstream endobj\n"
        "trailer << /Size 5 /Root 1 0 R >>\n%%EOF\n";
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE(summary.ok());
    CHECK(summary.value().text.find("chained filters work") != std::string::npos);
  }

  TEST_CASE("byte mutations never crash the parser") {
    const auto base =
        pdf::write_pdf({text_page(960, 540, "mutation fodder with some words"),
                        text_page(960, 540, "second page body")});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
      auto mutated = base;
      const int flips = 1 + static_cast<int>(rng() % 12);
      for (int f = 0; f < flips; ++f)
        mutated[rng() % mutated.size()] = static_cast<std::uint8_t>(rng() & 0xff);
      auto summary = verify::summarize_pdf(mutated);  // ok or error, never a crash
      if (summary.ok()) CHECK(summary.value().page_count >= 1);
    }
    // Truncations at arbitrary points behave too.
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t cut = 1 + rng() % (base.size() - 1);
      std::vector<std::uint8_t> prefix(base.begin(), base.begin() + static_cast<long>(cut));
      (void)verify::summarize_pdf(prefix);
    }
  }

  TEST_CASE("zero-page documents are an error") {
    const std::string raw =
        "%PDF-1.4\n"
        "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        "2 0 obj << /Type /Pages /Kids [] /Count 0 >> endobj\n"
        "trailer << /Size 3 /Root 1 0 R >>\n%%EOF\n";
    auto summary = verify::summarize_pdf(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    REQUIRE_FALSE(summary.ok());
    CHECK(summary.error().message.find("no pages") != std::string::npos);
  }
}
