#include <doctest.h>

#include <cmath>

#include "../support/fixtures.hpp"
#include "deckhand/eval/features.hpp"
#include "deckhand/eval/judge.hpp"
#include "deckhand/eval/report.hpp"

using namespace deckhand;
using namespace deckhand::eval;
using agent::ScriptedModelClient;

namespace {

std::vector<std::uint8_t> solid_png(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return img::encode_png(img::RasterImage::solid(64, 36, r, g, b));
}

double cosine(const FeatureMatrix& m, int a, int b) {
  double dot = 0;
  for (int c = 0; c < m.cols; ++c) dot += m.at(a, c) * m.at(b, c);
  return dot;
}

}  // namespace

TEST_SUITE("features") {
  TEST_CASE("byte-identical decks embed identically") {
    HistogramFeatureClient stub;
    std::vector<DeckImages> decks{{"a", {solid_png(10, 20, 30)}}, {"b", {solid_png(10, 20, 30)}}};
    auto extraction = extract_features(decks, stub);
    REQUIRE(extraction.ok());
    REQUIRE(extraction.value().features.rows == 2);
    CHECK(cosine(extraction.value().features, 0, 1) == doctest::Approx(1.0));
  }

  TEST_CASE("red and blue solids are nearly orthogonal") {
    HistogramFeatureClient stub;
    std::vector<DeckImages> decks{{"red", {solid_png(255, 0, 0)}},
                                  {"blue", {solid_png(0, 0, 255)}}};
    auto extraction = extract_features(decks, stub);
    REQUIRE(extraction.ok());
    CHECK(cosine(extraction.value().features, 0, 1) < 0.5);
  }

  TEST_CASE("empty decks are excluded and flagged") {
    HistogramFeatureClient stub;
    std::vector<DeckImages> decks{{"ok", {solid_png(1, 2, 3)}}, {"empty", {}}};
    auto extraction = extract_features(decks, stub);
    REQUIRE(extraction.ok());
    CHECK(extraction.value().features.rows == 1);
    REQUIRE(extraction.value().excluded.size() == 1);
    CHECK(extraction.value().excluded[0].find("empty") == 0);

    std::vector<DeckImages> none{{"empty", {}}};
    CHECK_FALSE(extract_features(none, stub).ok());
  }

  TEST_CASE("rows come out unit-normalized") {
    HistogramFeatureClient stub;
    std::vector<DeckImages> decks{{"a", {solid_png(77, 0, 200)}}};
    auto extraction = extract_features(decks, stub);
    REQUIRE(extraction.ok());
    double norm = 0;
    for (int c = 0; c < extraction.value().features.cols; ++c)
      norm += extraction.value().features.at(0, c) * extraction.value().features.at(0, c);
    CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_SUITE("judge") {
  TEST_CASE("scripted scores parse straight through") {
    ScriptedModelClient judge;
    judge.push_text(R"({"content": 4, "style": 5, "rationale": "solid"})");
    auto score = judge_slides({solid_png(1, 1, 1)}, judge, "rubric text");
    REQUIRE(score.ok());
    CHECK(score.value().content == doctest::Approx(4.0));
    CHECK(score.value().style == doctest::Approx(5.0));
  }

  TEST_CASE("out-of-range scores are re-asked, then the deck is unscored") {
    ScriptedModelClient judge;
    judge.push_text(R"({"content": 4, "style": 7, "rationale": "oops"})");
    judge.push_text(R"({"content": 4, "style": 4, "rationale": "fixed"})");
    auto score = judge_slides({solid_png(1, 1, 1)}, judge, "rubric");
    REQUIRE(score.ok());
    CHECK(score.value().style == doctest::Approx(4.0));

    ScriptedModelClient hopeless;
    hopeless.push_text("five-ish?");
    hopeless.push_text(R"({"content": 0, "style": 9})");
    auto failed = judge_slides({solid_png(1, 1, 1)}, hopeless, "rubric");
    REQUIRE_FALSE(failed.ok());
    CHECK(failed.error().message.find("unscored") != std::string::npos);
  }

  TEST_CASE("an empty image list is a precondition error") {
    ScriptedModelClient judge;
    CHECK_FALSE(judge_slides({}, judge, "rubric").ok());
  }

  TEST_CASE("the judge request carries the rubric and every page") {
    ScriptedModelClient judge;
    judge.push_text(R"({"content": 3, "style": 3, "rationale": "ok"})");
    REQUIRE(judge_slides({solid_png(1, 1, 1), solid_png(2, 2, 2)}, judge, "THE RUBRIC").ok());
    REQUIRE(judge.requests().size() == 1);
    const auto& messages = judge.requests()[0].messages;
    CHECK(messages[0].joined_text() == "THE RUBRIC");
    int images = 0;
    for (const auto& part : messages[1].content) {
      if (part.kind == agent::ContentPart::Kind::kImage) ++images;
    }
    CHECK(images == 2);
  }
}

TEST_SUITE("report") {
  TEST_CASE("component means aggregate to their average") {
    std::vector<TaskScores> per_task;
    // Three tasks whose means are exactly (4.80, 3.79, 4.07).
    const double constraints[] = {4.80, 4.80, 4.80};
    const double contents[] = {3.79, 3.79, 3.79};
    const double styles[] = {4.07, 4.07, 4.07};
    for (int i = 0; i < 3; ++i) {
      TaskScores t;
      t.task_id = "t" + std::to_string(i);
      t.constraint = constraints[i];
      t.judge = JudgeScore{contents[i], styles[i], ""};
      per_task.push_back(t);
    }
    const auto report = aggregate(per_task, 0.56);
    CHECK(report.constraint_mean == doctest::Approx(4.80));
    CHECK(report.content_mean == doctest::Approx(3.79));
    CHECK(report.style_mean == doctest::Approx(4.07));
    CHECK(report.avg == doctest::Approx(4.22).epsilon(1e-6));
  }

  TEST_CASE("perfect components average to five") {
    TaskScores t;
    t.task_id = "p";
    t.constraint = 5.0;
    t.judge = JudgeScore{5.0, 5.0, ""};
    const auto report = aggregate({t}, 1.0);
    CHECK(report.avg == doctest::Approx(5.0));
  }

  TEST_CASE("diversity is the vendi ratio") {
    // A Vendi score of 2.56 over four decks scales to 0.64.
    CHECK(2.56 / 4.0 == doctest::Approx(0.64));
    const auto report = aggregate({TaskScores{"x", 5.0, JudgeScore{4, 4, ""}}}, 2.56 / 4.0);
    CHECK(report.diversity == doctest::Approx(0.64));
  }

  TEST_CASE("unscored decks are excluded from judge means and counted") {
    std::vector<TaskScores> per_task;
    TaskScores scored;
    scored.task_id = "a";
    scored.constraint = 5.0;
    scored.judge = JudgeScore{4.0, 4.0, ""};
    TaskScores unscored;
    unscored.task_id = "b";
    unscored.constraint = 2.5;
    per_task.push_back(scored);
    per_task.push_back(unscored);
    const auto report = aggregate(per_task, 0.5);
    CHECK(report.scored_decks == 1);
    CHECK(report.unscored_decks == 1);
    CHECK(report.constraint_mean == doctest::Approx(3.75));
    CHECK(report.content_mean == doctest::Approx(4.0));
  }
}
