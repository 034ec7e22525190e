#include <benchmark/benchmark.h>

#include <random>

#include "biblio/coword.hpp"

using namespace biblio;

namespace {

// Zipf-ish keyword pools give realistic frequency skew.
Corpus synthetic_corpus(std::size_t records, std::size_t vocabulary, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < vocabulary; ++i) vocab.push_back("term" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> n_kw(2, 8);
  std::exponential_distribution<double> skew(1.5);

  Corpus corpus;
  for (std::size_t i = 0; i < records; ++i) {
    BiblioRecord r;
    r.id = "r" + std::to_string(i);
    r.doc_type = "ARTICLE";
    r.year = 2005;
    const std::size_t n = n_kw(rng);
    for (std::size_t k = 0; k < n; ++k) {
      const auto idx = std::min<std::size_t>(
          vocabulary - 1, static_cast<std::size_t>(skew(rng) / 4.0 * vocabulary));
      r.author_keywords.push_back(vocab[idx]);
    }
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

void BM_BuildGraph(benchmark::State& state) {
  const Corpus corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 800, 7);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(corpus, 4, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Args({2000, 1})->Args({2000, 4})->Args({8000, 1})->Args({8000, 4});

void BM_ClusterGraph(benchmark::State& state) {
  const Corpus corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 800, 8);
  const CooccurrenceGraph graph = build_graph(corpus, 4, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(cluster_graph(graph, Rational(1, 5), 3, 10));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(graph.edges.size()));
}
BENCHMARK(BM_ClusterGraph)->Arg(2000)->Arg(8000);

}  // namespace
