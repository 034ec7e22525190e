#include <benchmark/benchmark.h>

#include <random>

#include "biblio/pri.hpp"

using namespace biblio;

namespace {

std::vector<int> citation_list(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> v(0, 200);
  std::vector<int> counts(n);
  for (int& c : counts) c = v(rng);
  return counts;
}

void BM_RankWithTies(benchmark::State& state) {
  const auto counts = citation_list(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_with_ties(counts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RankWithTies)->Range(64, 1 << 14);

void BM_ScorePeerSet(benchmark::State& state) {
  PeerSet set;
  set.journal = "J";
  set.year = 2005;
  set.citation_counts = citation_list(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(score_paper(set.citation_counts[0], set, "p"));
}
BENCHMARK(BM_ScorePeerSet)->Range(64, 1 << 12);

void BM_ScoreCorpus(benchmark::State& state) {
  const int journals = 40;
  PeerIndex index;
  Corpus targets;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(0, 100);
  for (int j = 0; j < journals; ++j) {
    Corpus peers;
    for (int i = 0; i < 150; ++i) {
      BiblioRecord r;
      r.id = "p" + std::to_string(j) + "_" + std::to_string(i);
      r.doc_type = "ARTICLE";
      r.journal = "JOURNAL " + std::to_string(j);
      r.year = 2005;
      r.times_cited = v(rng);
      peers.records.push_back(r);
      if (i < 20) targets.records.push_back(peers.records.back());
    }
    index.add_corpus(peers);
  }
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(score_corpus(targets, index, threads));
  state.SetItemsProcessed(state.iterations() * targets.size());
}
BENCHMARK(BM_ScoreCorpus)->Arg(1)->Arg(4);

}  // namespace
