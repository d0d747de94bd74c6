#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "../support/eigen_oracle.hpp"
#include "deckhand/eval/vendi.hpp"

using namespace deckhand::eval;

namespace {

FeatureMatrix matrix_of(const std::vector<std::vector<double>>& rows) {
  FeatureMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) m.data.insert(m.data.end(), row.begin(), row.end());
  return m;
}

FeatureMatrix random_unit_rows(std::mt19937_64& rng, int n, int d) {
  std::vector<std::vector<double>> rows;
  for (int r = 0; r < n; ++r) {
    std::vector<double> row(static_cast<std::size_t>(d));
    double norm = 0.0;
    for (auto& v : row) {
      // Box-Muller from raw draws keeps this reproducible across platforms.
      const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
      const double u2 = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
      v = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (auto& v : row) v /= norm;
    rows.push_back(std::move(row));
  }
  return matrix_of(rows);
}

}  // namespace

TEST_SUITE("vendi") {
  TEST_CASE("identical rows give exactly one effective mode") {
    const std::vector<double> row{0.6, 0.8};
    auto score = vendi_score(matrix_of({row, row, row, row}));
    REQUIRE(score.ok());
    CHECK(std::abs(score.value() - 1.0) <= 1e-9);
  }

  TEST_CASE("n orthonormal rows give exactly n") {
    std::vector<std::vector<double>> rows(5, std::vector<double>(5, 0.0));
    for (int i = 0; i < 5; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    auto score = vendi_score(matrix_of(rows));
    REQUIRE(score.ok());
    CHECK(std::abs(score.value() - 5.0) <= 1e-9);
  }

  TEST_CASE("the two-one split matches the entropy closed form") {
    auto score = vendi_score(matrix_of({{1, 0}, {0, 1}, {1, 0}}));
    REQUIRE(score.ok());
    const double expected =
        std::exp(-(2.0 / 3.0) * std::log(2.0 / 3.0) - (1.0 / 3.0) * std::log(1.0 / 3.0));
    CHECK(std::abs(expected - 1.8899) < 1e-3);
    CHECK(score.value() == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(score.value() - 1.8899) <= 1e-3);
  }

  TEST_CASE("inputs must be unit rows and non-empty") {
    CHECK_FALSE(vendi_score(matrix_of({{2.0, 0.0}})).ok());
    CHECK_FALSE(vendi_score(FeatureMatrix{}).ok());
  }

  TEST_CASE("random matrices agree with the brute-force oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 16);
      const int d = 1 + static_cast<int>(rng() % 32);
      const auto m = random_unit_rows(rng, n, d);
      auto score = vendi_score(m);
      REQUIRE(score.ok());
      const double reference = oracle::vendi_oracle(m);
      CHECK(std::abs(score.value() - reference) <= 1e-6);
      CHECK(score.value() >= 1.0 - 1e-9);
      CHECK(score.value() <= n + 1e-9);
    }
  }

  TEST_CASE("row order does not matter") {
    std::mt19937_64 rng(7);
    auto m = random_unit_rows(rng, 6, 8);
    auto base = vendi_score(m);
    REQUIRE(base.ok());
    // Rotate rows.
    FeatureMatrix rotated = m;
    std::rotate(rotated.data.begin(), rotated.data.begin() + rotated.cols, rotated.data.end());
    auto score = vendi_score(rotated);
    REQUIRE(score.ok());
    CHECK(score.value() == doctest::Approx(base.value()).epsilon(1e-9));
  }

  TEST_CASE("duplicating a row never increases the diversity ratio") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 6);
      auto m = random_unit_rows(rng, n, 12);
      auto base = vendi_score(m);
      REQUIRE(base.ok());
      FeatureMatrix extended = m;
      extended.rows += 1;
      const std::size_t row = rng() % static_cast<std::size_t>(n);
      extended.data.insert(extended.data.end(), m.data.begin() + row * m.cols,
                           m.data.begin() + (row + 1) * m.cols);
      auto more = vendi_score(extended);
      REQUIRE(more.ok());
      CHECK(more.value() / extended.rows <= base.value() / m.rows + 1e-9);
    }
  }
}
