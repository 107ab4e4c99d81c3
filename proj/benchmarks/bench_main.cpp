#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "ambipun/context_words.hpp"
#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/rake.hpp"
#include "ambipun/textnorm.hpp"

namespace {

using namespace ambipun;

std::vector<std::string> synthetic_corpus(std::size_t lines, std::size_t vocab, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Zipf-ish word draw so a few words dominate, like real text.
  std::vector<double> weights(vocab);
  for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> word(weights.begin(), weights.end());
  std::uniform_int_distribution<int> len(4, 20);
  std::vector<std::string> out;
  out.reserve(lines);
  for (std::size_t i = 0; i < lines; ++i) {
    std::string s;
    for (int j = 0, n = len(rng); j < n; ++j) s += "w" + std::to_string(word(rng)) + " ";
    out.push_back(std::move(s));
  }
  return out;
}

EmbeddingTable synthetic_table(std::size_t vocab, std::size_t dim) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> coord;
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  for (std::size_t i = 0; i < vocab; ++i) {
    std::vector<double> v(dim);
    for (auto& x : v) x = coord(rng);
    rows.emplace_back("w" + std::to_string(i), std::move(v));
  }
  return EmbeddingTable::from_rows(dim, rows);
}

void BM_IndexBuild(benchmark::State& state) {
  const auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000, 1);
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CorpusIndex::from_sentences(corpus, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IndexBuild)->Args({10000, 1})->Args({10000, 4})->Args({100000, 4})->Unit(benchmark::kMillisecond);

void BM_NearestNeighbors(benchmark::State& state) {
  const auto table = synthetic_table(static_cast<std::size_t>(state.range(0)), 300);
  std::size_t q = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearest_neighbors(table, "w" + std::to_string(q++ % 100), 10));
  }
}
BENCHMARK(BM_NearestNeighbors)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_Rake(benchmark::State& state) {
  const auto sentences = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 800, 2);
  std::vector<std::string> stop;
  for (int i = 0; i < 40; ++i) stop.push_back("w" + std::to_string(i));
  const textnorm::StopwordList stopwords(stop);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rake::extract_text(sentences, stopwords));
  }
}
BENCHMARK(BM_Rake)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_TfIdfContext(benchmark::State& state) {
  const auto index = CorpusIndex::from_sentences(synthetic_corpus(50000, 5000, 3), 4);
  std::vector<std::string> stop;
  for (int i = 0; i < 40; ++i) stop.push_back("w" + std::to_string(i));
  const textnorm::StopwordList stopwords(stop);
  const RelatedWordSet related{1, {"w100", "w250", "w400", "w900", "w1500"}};
  ContextOptions opts;
  opts.pun_word = "w7";
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfidf_context(index, related, stopwords, {}, opts));
  }
}
BENCHMARK(BM_TfIdfContext)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
