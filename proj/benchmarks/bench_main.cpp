#include <benchmark/benchmark.h>

#include <random>

#include "deckhand/eval/vendi.hpp"
#include "deckhand/img/png_codec.hpp"
#include "deckhand/inspect/language.hpp"
#include "deckhand/inspect/markdown.hpp"
#include "deckhand/pdf/writer.hpp"
#include "deckhand/verify/pdf_summary.hpp"

using namespace deckhand;

namespace {

eval::FeatureMatrix random_features(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  eval::FeatureMatrix m;
  m.rows = n;
  m.cols = d;
  m.data.resize(static_cast<std::size_t>(n) * d);
  for (int r = 0; r < n; ++r) {
    double norm = 0.0;
    for (int c = 0; c < d; ++c) {
      const double v = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) - 0.5;
      m.data[static_cast<std::size_t>(r) * d + c] = v;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (int c = 0; c < d; ++c) m.data[static_cast<std::size_t>(r) * d + c] /= norm;
  }
  return m;
}

std::string big_manuscript(int slides) {
  std::string text;
  for (int i = 0; i < slides; ++i) {
    if (i) text += "\n---\n";
    text += "# Slide heading\n\n- point one with some words\n- point two with more words\n";
  }
  return text;
}

void BM_VendiScore(benchmark::State& state) {
  const auto m = random_features(static_cast<int>(state.range(0)), 64, 7);
  for (auto _ : state) {
    auto score = eval::vendi_score(m);
    benchmark::DoNotOptimize(score);
  }
}
BENCHMARK(BM_VendiScore)->Arg(8)->Arg(32)->Arg(128);

void BM_SplitSlides(benchmark::State& state) {
  const std::string text = big_manuscript(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto blocks = inspect::split_slides(text);
    benchmark::DoNotOptimize(blocks);
  }
}
BENCHMARK(BM_SplitSlides)->Arg(20)->Arg(200);

void BM_DetectLanguage(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < state.range(0); ++i)
    text += i % 3 ? "renewable storage grid words " : "可再生能源发展 ";
  for (auto _ : state) {
    auto lang = inspect::detect_language(text);
    benchmark::DoNotOptimize(lang);
  }
}
BENCHMARK(BM_DetectLanguage)->Arg(1000)->Arg(10000);

void BM_PngEncode(benchmark::State& state) {
  const auto image = img::RasterImage::solid(1280, 720, 30, 60, 120);
  for (auto _ : state) {
    auto png = img::encode_png(image);
    benchmark::DoNotOptimize(png);
  }
}
BENCHMARK(BM_PngEncode);

void BM_PdfWriteAndSummarize(benchmark::State& state) {
  std::vector<pdf::PageSpec> pages;
  for (int i = 0; i < 5; ++i) {
    pdf::PageSpec page;
    page.width_pt = 960;
    page.height_pt = 540;
    page.raster = img::RasterImage::solid(1280, 720, 10, 20, 30);
    page.text = "Benchmark page text for extraction.";
    pages.push_back(std::move(page));
  }
  for (auto _ : state) {
    const auto bytes = pdf::write_pdf(pages);
    auto summary = verify::summarize_pdf(bytes);
    benchmark::DoNotOptimize(summary);
  }
}
BENCHMARK(BM_PdfWriteAndSummarize);

}  // namespace

BENCHMARK_MAIN();
