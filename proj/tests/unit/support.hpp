#ifndef BIBLIO_TESTS_SUPPORT_HPP
#define BIBLIO_TESTS_SUPPORT_HPP

// Test-only helpers: independent oracles and generators. These deliberately
// avoid the library's own code paths (boost::rational instead of
// biblio::Rational, linear search instead of membership maps) so they can
// catch mistakes in the real implementations.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "biblio/coword.hpp"
#include "biblio/report.hpp"

namespace testsupport {

// ---------------------------------------------------------------- ranks

// Average-of-positions rank rule, recomputed per element by scanning the
// descending-sorted list.
inline std::vector<double> naive_tied_ranks(const std::vector<int>& counts) {
  std::vector<int> sorted = counts;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  std::vector<double> out;
  for (int value : counts) {
    double sum = 0.0;
    int n = 0;
    for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
      if (sorted[pos] == value) {
        sum += static_cast<double>(pos + 1);
        ++n;
      }
    }
    out.push_back(sum / n);
  }
  return out;
}

// ---------------------------------------------------------------- clustering

// Straightforward re-implementation of the greedy capped scan. Uses
// boost::rational comparisons on cosine^2 and a flat vector-of-sets state.
inline std::vector<std::set<std::string>> oracle_cluster_partition(
    const biblio::CooccurrenceGraph& g, boost::rational<long long> min_cos,
    std::size_t min_size, std::size_t max_size) {
  using rat = boost::rational<long long>;
  struct Edge {
    rat cos2;
    std::string a, b;
  };
  std::vector<Edge> edges;
  const rat threshold = min_cos * min_cos;
  for (const biblio::CoEdge& e : g.edges) {
    const long long co = static_cast<long long>(e.co_count);
    const long long ff = static_cast<long long>(g.frequency.at(e.a)) *
                         static_cast<long long>(g.frequency.at(e.b));
    rat cos2(co * co, ff);
    if (min_cos.numerator() > 0 && cos2 < threshold) continue;
    edges.push_back({cos2, e.a, e.b});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.cos2 != y.cos2) return x.cos2 > y.cos2;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  std::vector<std::set<std::string>> clusters;
  auto find_cluster = [&clusters](const std::string& term) -> int {
    for (std::size_t i = 0; i < clusters.size(); ++i)
      if (clusters[i].count(term)) return static_cast<int>(i);
    return -1;
  };
  for (const Edge& e : edges) {
    const int ca = find_cluster(e.a);
    const int cb = find_cluster(e.b);
    if (ca < 0 && cb < 0) {
      if (max_size >= 2) clusters.push_back({e.a, e.b});
    } else if (ca < 0 || cb < 0) {
      const int c = ca >= 0 ? ca : cb;
      const std::string& loose = ca >= 0 ? e.b : e.a;
      if (clusters[static_cast<std::size_t>(c)].size() < max_size)
        clusters[static_cast<std::size_t>(c)].insert(loose);
    }
  }
  std::vector<std::set<std::string>> out;
  for (auto& c : clusters)
    if (c.size() >= min_size) out.push_back(std::move(c));
  return out;
}

inline std::set<std::set<std::string>> as_partition(
    const std::vector<std::set<std::string>>& clusters) {
  return {clusters.begin(), clusters.end()};
}

inline std::set<std::set<std::string>> as_partition(const biblio::ClusterSet& set) {
  std::set<std::set<std::string>> out;
  for (const biblio::Cluster& c : set.clusters)
    out.insert(std::set<std::string>(c.terms.begin(), c.terms.end()));
  return out;
}

// Random graph with valid invariants: freq in [4, 20], co <= min(fa, fb).
inline biblio::CooccurrenceGraph random_graph(std::mt19937& rng, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> n_terms(2, max_terms);
  std::uniform_int_distribution<int> freq_dist(4, 20);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  biblio::CooccurrenceGraph g;
  const std::size_t n = n_terms(rng);
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "t%02zu", i);
    terms.emplace_back(buf);
    g.frequency[terms.back()] = static_cast<std::size_t>(freq_dist(rng));
  }
  g.record_count = 50;
  const double edge_prob = 0.55;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) > edge_prob) continue;
      const std::size_t fa = g.frequency[terms[i]];
      const std::size_t fb = g.frequency[terms[j]];
      std::uniform_int_distribution<std::size_t> co_dist(1, std::min(fa, fb));
      biblio::CoEdge e;
      e.a = terms[i];
      e.b = terms[j];
      e.co_count = co_dist(rng);
      e.cosine = static_cast<double>(e.co_count) /
                 std::sqrt(static_cast<double>(fa) * static_cast<double>(fb));
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

// Cluster set with synthetic coordinates (for diagram/partition tests).
inline biblio::ClusterSet random_cluster_set(std::mt19937& rng, std::size_t max_clusters) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_clusters);
  std::uniform_int_distribution<int> coord(0, 9);  // duplicates on purpose
  biblio::ClusterSet set;
  const std::size_t n = n_dist(rng);
  for (std::size_t i = 0; i < n; ++i) {
    biblio::Cluster c;
    c.number = static_cast<int>(i + 1);
    c.terms = {"kw" + std::to_string(i) + "a", "kw" + std::to_string(i) + "b",
               "kw" + std::to_string(i) + "c"};
    c.label = c.terms[0];
    c.centrality = coord(rng) / 10.0;
    c.density = coord(rng) / 10.0;
    set.clusters.push_back(std::move(c));
  }
  return set;
}

// ---------------------------------------------------------------- XML

// Minimal well-formedness check: declaration, balanced tags, quoted
// attributes. Good enough for the SVG this project writes.
inline bool well_formed_xml(std::string_view doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      ++i;
      continue;
    }
    std::size_t close = i;
    bool in_quote = false;
    while (close < doc.size() && (doc[close] != '>' || in_quote)) {
      if (doc[close] == '"') in_quote = !in_quote;
      ++close;
    }
    if (close == doc.size()) return false;
    std::string_view tag = doc.substr(i + 1, close - i - 1);
    if (!tag.empty() && tag.front() == '?') {
      // declaration
    } else if (!tag.empty() && tag.front() == '/') {
      if (stack.empty()) return false;
      std::string name(tag.substr(1));
      if (stack.back() != name) return false;
      stack.pop_back();
    } else if (!tag.empty() && tag.back() == '/') {
      // self-closing
    } else {
      std::string name(tag.substr(0, tag.find_first_of(" \t\n")));
      stack.push_back(name);
    }
    i = close + 1;
  }
  return stack.empty();
}

inline std::size_t count_occurrences(std::string_view text, std::string_view needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string_view::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace testsupport

#endif  // BIBLIO_TESTS_SUPPORT_HPP
