#include <doctest.h>

#include <random>

#include "biblio/coword.hpp"
#include "biblio/errors.hpp"
#include "support.hpp"

using namespace biblio;

namespace {

BiblioRecord with_keywords(const std::string& id, std::vector<std::string> de,
                           std::vector<std::string> idkw = {}) {
  BiblioRecord r;
  r.id = id;
  r.doc_type = "ARTICLE";
  r.year = 2005;
  r.author_keywords = std::move(de);
  r.keywords_plus = std::move(idkw);
  return r;
}

Corpus corpus_of(std::vector<BiblioRecord> records) {
  Corpus c;
  c.records = std::move(records);
  return c;
}

// A graph made by hand; cluster_graph only needs frequencies and edges.
CooccurrenceGraph graph_with(std::map<std::string, std::size_t> freq,
                             std::vector<std::tuple<std::string, std::string, std::size_t>> co) {
  CooccurrenceGraph g;
  g.frequency = std::move(freq);
  for (auto& [a, b, count] : co) {
    CoEdge e;
    e.a = a;
    e.b = b;
    e.co_count = count;
    e.cosine = static_cast<double>(count) /
               std::sqrt(static_cast<double>(g.frequency.at(a)) *
                         static_cast<double>(g.frequency.at(b)));
    g.edges.push_back(std::move(e));
  }
  g.record_count = 100;
  return g;
}

}  // namespace

TEST_SUITE("coword") {

TEST_CASE("keywords merge DE and ID with set semantics") {
  const auto terms = extract_keywords(
      with_keywords("r", {"Sea Ice", "Arctic"}, {"SEA ICE", "Permafrost"}));
  CHECK(terms == std::set<std::string>{"sea ice", "arctic", "permafrost"});

  CHECK(extract_keywords(with_keywords("r", {}, {})).empty());
  CHECK(extract_keywords(with_keywords("r", {"Calanus  finmarchicus"})) ==
        std::set<std::string>{"calanus finmarchicus"});
  CHECK(extract_keywords(with_keywords("r", {"\"quoted term.\""})) ==
        std::set<std::string>{"quoted term"});
}

TEST_CASE("perfect co-occurrence gives cosine 1") {
  const Corpus c = corpus_of({with_keywords("r1", {"a", "b"}),
                              with_keywords("r2", {"a", "b"})});
  const CooccurrenceGraph g = build_graph(c, 1);
  CHECK(g.frequency.at("a") == 2);
  CHECK(g.frequency.at("b") == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].co_count == 2);
  CHECK(g.edges[0].cosine == doctest::Approx(1.0));
}

TEST_CASE("terms that never co-occur share no edge") {
  const Corpus c = corpus_of({with_keywords("r1", {"a"}), with_keywords("r2", {"b"})});
  CHECK(build_graph(c, 1).edges.empty());
}

TEST_CASE("cosine follows the Salton formula") {
  // freq a = 4, freq b = 4, co = 2 -> 2/sqrt(16) = 0.5
  std::vector<BiblioRecord> records;
  records.push_back(with_keywords("r1", {"a", "b"}));
  records.push_back(with_keywords("r2", {"a", "b"}));
  records.push_back(with_keywords("r3", {"a"}));
  records.push_back(with_keywords("r4", {"a"}));
  records.push_back(with_keywords("r5", {"b"}));
  records.push_back(with_keywords("r6", {"b"}));
  const CooccurrenceGraph g = build_graph(corpus_of(std::move(records)), 4);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].cosine == doctest::Approx(0.5));
}

TEST_CASE("terms below the frequency threshold vanish before edges are built") {
  std::vector<BiblioRecord> records;
  for (int i = 0; i < 4; ++i)
    records.push_back(with_keywords("r" + std::to_string(i), {"common", "rare"}));
  records[3].author_keywords = {"common"};  // rare now has frequency 3
  const CooccurrenceGraph g = build_graph(corpus_of(std::move(records)), 4);
  CHECK(g.frequency.count("common") == 1);
  CHECK(g.frequency.count("rare") == 0);
  CHECK(g.edges.empty());

  CHECK_THROWS_AS(build_graph(Corpus{}, 4), DomainError);
  CHECK_THROWS_AS(build_graph(corpus_of({with_keywords("r", {"a"})}), 0), DomainError);
}

TEST_CASE("graph building ignores record order and thread count") {
  std::mt19937 rng(11);
  std::vector<BiblioRecord> records;
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<std::size_t> n_kw(1, 4);
  std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> kws;
    for (std::size_t k = 0; k < n_kw(rng); ++k) kws.push_back(pool[which(rng)]);
    records.push_back(with_keywords("r" + std::to_string(i), kws));
  }
  Corpus c = corpus_of(records);
  const std::string base = to_csv_edges(build_graph(c, 2, 1));
  CHECK(to_csv_edges(build_graph(c, 2, 4)) == base);
  std::shuffle(c.records.begin(), c.records.end(), rng);
  CHECK(to_csv_edges(build_graph(c, 2, 3)) == base);
}

TEST_CASE("cosine symmetry and bounds hold on random graphs") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const CooccurrenceGraph g = testsupport::random_graph(rng, 10);
    for (const CoEdge& e : g.edges) {
      CHECK(e.a < e.b);
      CHECK(e.cosine >= 0.0);
      CHECK(e.cosine <= 1.0 + 1e-12);
      const std::size_t fa = g.frequency.at(e.a);
      const std::size_t fb = g.frequency.at(e.b);
      CHECK(e.co_count <= std::min(fa, fb));
      const bool is_one = e.co_count == fa && fa == fb && e.co_count == fb;
      CHECK((e.cosine == 1.0) == is_one);
    }
  }
}

TEST_CASE("two disjoint cliques come back as two clusters") {
  for (std::size_t k = 3; k <= 10; ++k) {
    std::map<std::string, std::size_t> freq;
    std::vector<std::tuple<std::string, std::string, std::size_t>> co;
    std::vector<std::string> left, right;
    for (std::size_t i = 0; i < k; ++i) {
      left.push_back("a" + std::to_string(i));
      right.push_back("b" + std::to_string(i));
      freq[left.back()] = 10;
      freq[right.back()] = 10;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        co.emplace_back(left[i], left[j], 9);
        co.emplace_back(right[i], right[j], 9);
      }
    const ClusterSet set = cluster_graph(graph_with(freq, co), Rational(1, 5), 3, 10);
    REQUIRE(set.clusters.size() == 2);
    CHECK(std::set<std::string>(set.clusters[0].terms.begin(), set.clusters[0].terms.end()) ==
          std::set<std::string>(left.begin(), left.end()));
    CHECK(std::set<std::string>(set.clusters[1].terms.begin(), set.clusters[1].terms.end()) ==
          std::set<std::string>(right.begin(), right.end()));
    CHECK(set.clusters[0].centrality == 0.0);  // no cross edges at all
  }
}

TEST_CASE("a 12-term chain fills one cluster and drops the remainder") {
  std::map<std::string, std::size_t> freq;
  std::vector<std::tuple<std::string, std::string, std::size_t>> co;
  std::vector<std::string> chain;
  for (int i = 0; i < 12; ++i) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "t%02d", i);
    chain.emplace_back(buf);
    freq[chain.back()] = 20;
  }
  // descending cosines along the chain: co drops from 19 to 8
  for (int i = 0; i < 11; ++i)
    co.emplace_back(chain[static_cast<std::size_t>(i)],
                    chain[static_cast<std::size_t>(i) + 1],
                    static_cast<std::size_t>(19 - i));
  const ClusterSet set = cluster_graph(graph_with(freq, co), Rational(1, 5), 3, 10);
  REQUIRE(set.clusters.size() == 1);
  CHECK(set.clusters[0].terms.size() == 10);
  CHECK(set.clusters[0].terms.front() == "t00");
  CHECK(set.clusters[0].terms.back() == "t09");
}

TEST_CASE("with min_size 2 the chain remainder survives and links back") {
  std::map<std::string, std::size_t> freq;
  std::vector<std::tuple<std::string, std::string, std::size_t>> co;
  std::vector<std::string> chain;
  for (int i = 0; i < 12; ++i) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "t%02d", i);
    chain.emplace_back(buf);
    freq[chain.back()] = 20;
  }
  for (int i = 0; i < 11; ++i)
    co.emplace_back(chain[static_cast<std::size_t>(i)],
                    chain[static_cast<std::size_t>(i) + 1],
                    static_cast<std::size_t>(19 - i));
  const ClusterSet set = cluster_graph(graph_with(freq, co), Rational(1, 5), 2, 10);
  REQUIRE(set.clusters.size() == 2);
  CHECK(set.clusters[1].terms == std::vector<std::string>{"t10", "t11"});
  // the passed-over t09-t10 edge now links the two clusters
  CHECK(set.clusters[1].centrality > 0.0);
  REQUIRE(set.clusters[1].external_edges.size() == 1);
  CHECK(set.clusters[1].external_edges[0].a == "t09");
}

TEST_CASE("a graph below the cosine threshold yields no clusters") {
  std::map<std::string, std::size_t> freq{{"a", 10}, {"b", 10}, {"c", 10}};
  const ClusterSet set = cluster_graph(
      graph_with(freq, {{"a", "b", 1}, {"b", "c", 1}}), Rational(1, 5), 3, 10);
  CHECK(set.clusters.empty());
  CHECK(set.eligible_edge_count == 0);
  CHECK_THROWS_AS(cluster_graph(graph_with(freq, {}), Rational(1, 5), 3, 2), DomainError);
}

TEST_CASE("an exact-threshold cosine is still eligible") {
  // co/sqrt(fa*fb) = 2/sqrt(100) = 0.2 exactly
  std::map<std::string, std::size_t> freq{{"a", 10}, {"b", 10}, {"c", 10}};
  const ClusterSet set = cluster_graph(
      graph_with(freq, {{"a", "b", 2}, {"a", "c", 2}}), Rational(1, 5), 3, 10);
  CHECK(set.eligible_edge_count == 2);
  REQUIRE(set.clusters.size() == 1);
  CHECK(set.clusters[0].terms.size() == 3);
}

TEST_CASE("threshold corner cases") {
  std::map<std::string, std::size_t> freq{{"a", 4}, {"b", 4}, {"c", 4}};
  const auto g = graph_with(freq, {{"a", "b", 4}, {"b", "c", 4}});
  // a threshold above 1 can match nothing
  CHECK(cluster_graph(g, Rational(3, 2), 3, 10).clusters.empty());
  // thresholds of absurd precision are rejected instead of overflowing
  CHECK_THROWS_AS(cluster_graph(g, Rational(1, 3'000'000'000LL), 3, 10), DomainError);
  // zero or negative thresholds admit every edge
  CHECK(cluster_graph(g, Rational(0), 3, 10).eligible_edge_count == 2);
}

TEST_CASE("raising the threshold never admits more edges") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CooccurrenceGraph g = testsupport::random_graph(rng, 12);
    std::size_t previous = g.edges.size();
    for (int step = 1; step <= 5; ++step) {
      const ClusterSet set = cluster_graph(g, Rational(step, 5), 1, 10);
      CHECK(set.eligible_edge_count <= previous);
      previous = set.eligible_edge_count;
    }
  }
}

TEST_CASE("clustering matches the independent scan-rule oracle") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const CooccurrenceGraph g = testsupport::random_graph(rng, 12);
    const ClusterSet mine = cluster_graph(g, Rational(1, 5), 3, 10);
    const auto oracle =
        testsupport::oracle_cluster_partition(g, {1, 5}, 3, 10);
    CHECK(testsupport::as_partition(mine) == testsupport::as_partition(oracle));
  }
}

TEST_CASE("identical graphs give identical cluster sets") {
  std::mt19937 rng(15);
  const CooccurrenceGraph g = testsupport::random_graph(rng, 12);
  const std::string a = to_csv(cluster_graph(g, Rational(1, 5), 3, 10));
  const std::string b = to_csv(cluster_graph(g, Rational(1, 5), 3, 10));
  CHECK(a == b);
}

TEST_CASE("cluster sizes stay inside the bounds and term sets are disjoint") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const CooccurrenceGraph g = testsupport::random_graph(rng, 12);
    const ClusterSet set = cluster_graph(g, Rational(1, 10), 3, 6);
    std::set<std::string> seen;
    for (const Cluster& c : set.clusters) {
      CHECK(c.terms.size() >= 3);
      CHECK(c.terms.size() <= 6);
      for (const std::string& t : c.terms) CHECK(seen.insert(t).second);
    }
  }
}

TEST_CASE("density and centrality are means of link cosines") {
  std::vector<CoEdge> internal(2);
  internal[0].cosine = 0.5;
  internal[1].cosine = 0.3;
  CHECK(link_aggregate(internal, LinkAggregate::mean) == doctest::Approx(0.4));
  CHECK(link_aggregate(internal, LinkAggregate::sum) == doctest::Approx(0.8));
  CHECK(link_aggregate({}, LinkAggregate::mean) == 0.0);  // isolated cluster

  std::vector<CoEdge> external(2);
  external[0].cosine = 0.2;
  external[1].cosine = 0.4;
  CHECK(link_aggregate(external, LinkAggregate::mean) == doctest::Approx(0.3));
}

TEST_CASE("sum mode scales density and centrality by the link count") {
  std::mt19937 rng(17);
  const CooccurrenceGraph g = testsupport::random_graph(rng, 12);
  const ClusterSet mean_set = cluster_graph(g, Rational(1, 5), 3, 10, LinkAggregate::mean);
  const ClusterSet sum_set = cluster_graph(g, Rational(1, 5), 3, 10, LinkAggregate::sum);
  REQUIRE(mean_set.clusters.size() == sum_set.clusters.size());
  for (std::size_t i = 0; i < mean_set.clusters.size(); ++i) {
    const Cluster& m = mean_set.clusters[i];
    const Cluster& s = sum_set.clusters[i];
    CHECK(m.terms == s.terms);  // aggregation mode cannot change memberships
    CHECK(s.density ==
          doctest::Approx(m.density * static_cast<double>(m.internal_edges.size())));
    CHECK(s.centrality ==
          doctest::Approx(m.centrality * static_cast<double>(m.external_edges.size())));
  }
}

TEST_CASE("labels maximize linksum times frequency") {
  std::map<std::string, std::size_t> freq{{"a", 10}, {"b", 6}};
  std::vector<CoEdge> internal(2);
  internal[0] = {"a", "b", 1, 0.7};
  internal[1] = {"a", "x", 1, 0.5};  // a: 1.2, b: 0.7
  // a: 1.2 * 10 = 12 beats b: 0.7 * 6 = 4.2
  CHECK(label_cluster({"a", "b"}, internal, freq) == "a");

  // hub of a star wins: largest linksum and frequency
  std::map<std::string, std::size_t> star_freq{{"hub", 10}, {"s1", 5}, {"s2", 5}, {"s3", 5}};
  std::vector<CoEdge> star(3);
  star[0] = {"hub", "s1", 1, 0.4};
  star[1] = {"hub", "s2", 1, 0.4};
  star[2] = {"hub", "s3", 1, 0.4};
  CHECK(label_cluster({"hub", "s1", "s2", "s3"}, star, star_freq) == "hub");

  // exact tie goes to the lexicographically smaller term
  std::map<std::string, std::size_t> tie_freq{{"alpha", 4}, {"beta", 4}};
  std::vector<CoEdge> tie(1);
  tie[0] = {"alpha", "beta", 2, 0.5};
  CHECK(label_cluster({"alpha", "beta"}, tie, tie_freq) == "alpha");
}

TEST_CASE("category keyword tables attribute per category") {
  BiblioRecord geo = with_keywords("g", {"permafrost"});
  geo.categories = {"GEOLOGY"};
  BiblioRecord both = with_keywords("b", {"sea ice"});
  both.categories = {"GEOLOGY", "OCEANOGRAPHY"};
  const Corpus c = corpus_of({geo, both});

  const auto tables = category_keywords(c, 10);
  REQUIRE(tables.size() == 2);
  CHECK(tables[0].category == "GEOLOGY");
  CHECK(tables[0].paper_count == 2);
  REQUIRE(tables[0].keywords.entries.size() == 2);
  CHECK(tables[1].category == "OCEANOGRAPHY");
  REQUIRE(tables[1].keywords.entries.size() == 1);
  CHECK(tables[1].keywords.entries[0].key == "sea ice");

  const auto stopped = category_keywords(c, 10, {"sea ice"});
  CHECK(stopped[0].keywords.entries.size() == 1);
  CHECK(stopped[0].keywords.entries[0].key == "permafrost");
  CHECK(stopped[1].keywords.entries.empty());

  CHECK(category_keywords(Corpus{}, 10).empty());
}

}  // TEST_SUITE
