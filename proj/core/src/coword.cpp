#include "biblio/coword.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "biblio/csv.hpp"
#include "biblio/errors.hpp"
#include "biblio/parallel.hpp"

namespace biblio {

namespace {

using u128 = unsigned __int128;

std::string format_double(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

}  // namespace

std::set<std::string> extract_keywords(const BiblioRecord& record) {
  std::set<std::string> out;
  auto add = [&out](const std::string& raw) {
    std::string term = text::strip_punct_edges(normalize_keyword(raw));
    if (!term.empty()) out.insert(std::move(term));
  };
  for (const std::string& k : record.author_keywords) add(k);
  for (const std::string& k : record.keywords_plus) add(k);
  return out;
}

CooccurrenceGraph build_graph(const Corpus& corpus, std::size_t min_frequency,
                              unsigned threads) {
  if (corpus.empty()) throw DomainError("empty corpus");
  if (min_frequency < 1) throw DomainError("min_frequency must be at least 1");

  const std::size_t n = corpus.size();
  std::vector<std::vector<std::string>> record_terms(n);
  parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto set = extract_keywords(corpus.records[i]);
      record_terms[i].assign(set.begin(), set.end());
    }
  });

  CooccurrenceGraph graph;
  graph.record_count = n;
  std::map<std::string, std::size_t> frequency;
  for (const auto& terms : record_terms)
    for (const std::string& t : terms) ++frequency[t];
  for (const auto& [term, freq] : frequency)
    if (freq >= min_frequency) graph.frequency.emplace(term, freq);

  // Pair counts over surviving terms; per-record term lists stay sorted, so
  // pairs come out with a < b. Chunk-local maps merge by addition.
  const unsigned chunk_threads =
      threads == 0 ? std::thread::hardware_concurrency() : threads;
  const std::size_t n_chunks = std::max<std::size_t>(1, std::min<std::size_t>(
      n, chunk_threads == 0 ? 1 : chunk_threads));
  std::vector<std::map<std::pair<std::string, std::string>, std::size_t>> partials(n_chunks);
  parallel_chunks(n, static_cast<unsigned>(n_chunks),
                  [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
    auto& local = partials[chunk];
    std::vector<const std::string*> alive;
    for (std::size_t i = lo; i < hi; ++i) {
      alive.clear();
      for (const std::string& t : record_terms[i])
        if (graph.frequency.count(t)) alive.push_back(&t);
      for (std::size_t x = 0; x < alive.size(); ++x)
        for (std::size_t y = x + 1; y < alive.size(); ++y)
          ++local[{*alive[x], *alive[y]}];
    }
  });
  std::map<std::pair<std::string, std::string>, std::size_t> co_counts;
  for (const auto& local : partials)
    for (const auto& [pair, count] : local) co_counts[pair] += count;

  graph.edges.reserve(co_counts.size());
  for (const auto& [pair, count] : co_counts) {
    CoEdge e;
    e.a = pair.first;
    e.b = pair.second;
    e.co_count = count;
    const double fa = static_cast<double>(graph.frequency.at(e.a));
    const double fb = static_cast<double>(graph.frequency.at(e.b));
    e.cosine = static_cast<double>(count) / std::sqrt(fa * fb);
    graph.edges.push_back(std::move(e));
  }
  return graph;
}

namespace {

// Exact edge ordering data: cosine^2 = co^2 / (freq_a * freq_b).
struct EligibleEdge {
  const CoEdge* edge;
  u128 co_sq;
  u128 freq_prod;
};

bool cosine_greater(const EligibleEdge& x, const EligibleEdge& y) {
  const u128 lhs = x.co_sq * y.freq_prod;
  const u128 rhs = y.co_sq * x.freq_prod;
  if (lhs != rhs) return lhs > rhs;
  if (x.edge->a != y.edge->a) return x.edge->a < y.edge->a;
  return x.edge->b < y.edge->b;
}

bool edge_pair_less(const CoEdge& x, const CoEdge& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

}  // namespace

double link_aggregate(const std::vector<CoEdge>& edges, LinkAggregate aggregate) {
  if (edges.empty()) return 0.0;
  double sum = 0.0;
  for (const CoEdge& e : edges) sum += e.cosine;
  return aggregate == LinkAggregate::mean ? sum / static_cast<double>(edges.size()) : sum;
}

std::string label_cluster(const std::vector<std::string>& terms,
                          const std::vector<CoEdge>& internal_edges,
                          const std::map<std::string, std::size_t>& frequency) {
  if (terms.empty()) throw DomainError("empty cluster");
  std::map<std::string, double> linksum;
  for (const CoEdge& e : internal_edges) {
    linksum[e.a] += e.cosine;
    linksum[e.b] += e.cosine;
  }
  std::string best;
  double best_score = -1.0;
  for (const std::string& t : terms) {
    auto ls = linksum.find(t);
    auto fr = frequency.find(t);
    const double score = (ls == linksum.end() ? 0.0 : ls->second) *
                         (fr == frequency.end() ? 0.0 : static_cast<double>(fr->second));
    if (best.empty() || score > best_score || (score == best_score && t < best)) {
      best = t;
      best_score = score;
    }
  }
  return best;
}

ClusterSet cluster_graph(const CooccurrenceGraph& graph, const Rational& min_cosine,
                         std::size_t min_size, std::size_t max_size,
                         LinkAggregate aggregate) {
  if (min_size < 1 || min_size > max_size)
    throw DomainError("cluster size bounds must satisfy 1 <= min_size <= max_size");

  ClusterSet result;
  result.min_cosine = min_cosine;
  result.min_size = min_size;
  result.max_size = max_size;
  result.aggregate = aggregate;

  // Threshold test in exact integers: co/sqrt(fa*fb) >= p/q
  // <=> co^2 * q^2 >= p^2 * fa * fb (all values non-negative). The
  // denominator cap keeps the 128-bit products below overflow.
  if (min_cosine.denominator() > 1'000'000'000)
    throw DomainError("min_cosine supports at most 9 decimal places");
  const bool all_pass = min_cosine.numerator() <= 0;
  const bool none_pass = min_cosine > Rational(1);  // cosines never exceed 1
  const u128 p = all_pass ? 0 : static_cast<u128>(min_cosine.numerator());
  const u128 q = static_cast<u128>(min_cosine.denominator());
  std::vector<EligibleEdge> eligible;
  for (const CoEdge& e : graph.edges) {
    if (none_pass) break;
    const u128 co = static_cast<u128>(e.co_count);
    const u128 ff = static_cast<u128>(graph.frequency.at(e.a)) *
                    static_cast<u128>(graph.frequency.at(e.b));
    if (!all_pass && co * co * q * q < p * p * ff) continue;
    eligible.push_back({&e, co * co, ff});
  }
  result.eligible_edge_count = eligible.size();
  std::sort(eligible.begin(), eligible.end(), cosine_greater);

  // Membership scan.
  std::map<std::string, std::size_t> member;
  std::vector<std::vector<std::string>> protos;
  for (const EligibleEdge& ee : eligible) {
    const CoEdge& e = *ee.edge;
    auto ia = member.find(e.a);
    auto ib = member.find(e.b);
    const bool ca = ia != member.end();
    const bool cb = ib != member.end();
    if (!ca && !cb) {
      if (max_size >= 2) {
        member[e.a] = protos.size();
        member[e.b] = protos.size();
        protos.push_back({e.a, e.b});
      }
    } else if (ca != cb) {
      const std::size_t c = ca ? ia->second : ib->second;
      const std::string& other = ca ? e.b : e.a;
      if (protos[c].size() < max_size) {
        protos[c].push_back(other);
        member[other] = c;
      }
      // Full cluster: the edge is passed over; `other` stays free and may
      // seed or join a cluster through a later edge.
    }
  }

  // Drop undersized clusters, renumber survivors in creation order.
  std::map<std::string, int> survivor_of;  // term -> 1-based cluster number
  for (const auto& proto : protos) {
    if (proto.size() < min_size) continue;
    Cluster c;
    c.number = static_cast<int>(result.clusters.size()) + 1;
    c.terms = proto;
    for (const std::string& t : proto) survivor_of[t] = c.number;
    result.clusters.push_back(std::move(c));
  }

  // Classify every eligible edge by final membership. Edges touching dropped
  // or never-clustered terms carry no statistics.
  for (const EligibleEdge& ee : eligible) {
    const CoEdge& e = *ee.edge;
    auto sa = survivor_of.find(e.a);
    auto sb = survivor_of.find(e.b);
    if (sa == survivor_of.end() || sb == survivor_of.end()) continue;
    if (sa->second == sb->second) {
      result.clusters[static_cast<std::size_t>(sa->second) - 1].internal_edges.push_back(e);
    } else {
      result.clusters[static_cast<std::size_t>(sa->second) - 1].external_edges.push_back(e);
      result.clusters[static_cast<std::size_t>(sb->second) - 1].external_edges.push_back(e);
    }
  }

  for (Cluster& c : result.clusters) {
    std::sort(c.internal_edges.begin(), c.internal_edges.end(), edge_pair_less);
    std::sort(c.external_edges.begin(), c.external_edges.end(), edge_pair_less);
    c.density = link_aggregate(c.internal_edges, aggregate);
    c.centrality = link_aggregate(c.external_edges, aggregate);
    c.label = label_cluster(c.terms, c.internal_edges, graph.frequency);
  }
  return result;
}

std::vector<CategoryKeywords> category_keywords(const Corpus& corpus, std::size_t top_k,
                                                const std::set<std::string>& stoplist) {
  std::vector<CategoryKeywords> out;
  if (corpus.empty() || top_k == 0) return out;

  std::vector<std::set<std::string>> record_terms;
  record_terms.reserve(corpus.size());
  for (const BiblioRecord& rec : corpus.records) record_terms.push_back(extract_keywords(rec));

  std::map<std::string, std::size_t> category_counts;
  for (const BiblioRecord& rec : corpus.records) {
    std::set<std::string> unique(rec.categories.begin(), rec.categories.end());
    for (const std::string& c : unique) ++category_counts[c];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(category_counts.begin(),
                                                          category_counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  for (const auto& [category, paper_count] : ranked) {
    CategoryKeywords ck;
    ck.category = category;
    ck.paper_count = paper_count;
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& cats = corpus.records[i].categories;
      if (std::find(cats.begin(), cats.end(), category) == cats.end()) continue;
      for (const std::string& t : record_terms[i])
        if (!stoplist.count(t)) ++counts[t];
    }
    ck.keywords.total = paper_count;
    for (const auto& [term, count] : counts)
      ck.keywords.entries.push_back(
          {term, count,
           Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(paper_count))});
    std::sort(ck.keywords.entries.begin(), ck.keywords.entries.end(),
              [](const FrequencyEntry& a, const FrequencyEntry& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.key < b.key;
              });
    out.push_back(std::move(ck));
  }
  return out;
}

std::set<std::string> parse_stoplist(std::string_view content) {
  std::set<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= content.size(); ++i) {
    if (i != content.size() && content[i] != '\n') continue;
    std::string_view line = content.substr(start, i - start);
    start = i + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::string term = text::strip_punct_edges(normalize_keyword(text::trim(line)));
    if (!term.empty()) out.insert(std::move(term));
  }
  return out;
}

std::string to_csv_terms(const CooccurrenceGraph& graph) {
  std::vector<std::pair<std::string, std::size_t>> ranked(graph.frequency.begin(),
                                                          graph.frequency.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  CsvBuilder csv;
  csv.row({"term", "frequency"});
  for (const auto& [term, freq] : ranked) csv.row({term, std::to_string(freq)});
  return csv.str();
}

std::string to_csv_edges(const CooccurrenceGraph& graph) {
  CsvBuilder csv;
  csv.row({"term_a", "term_b", "co_count", "cosine"});
  for (const CoEdge& e : graph.edges)
    csv.row({e.a, e.b, std::to_string(e.co_count), format_double(e.cosine, 4)});
  return csv.str();
}

std::string to_csv(const ClusterSet& set) {
  CsvBuilder csv;
  csv.row({"cluster_number", "label", "density", "centrality", "terms"});
  for (const Cluster& c : set.clusters) {
    std::string terms;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      if (i) terms += ';';
      terms += c.terms[i];
    }
    csv.row({std::to_string(c.number), c.label, format_double(c.density, 4),
             format_double(c.centrality, 4), terms});
  }
  return csv.str();
}

std::string to_csv(const std::vector<CategoryKeywords>& tables) {
  CsvBuilder csv;
  csv.row({"category", "keyword", "count"});
  for (const CategoryKeywords& ck : tables)
    for (const FrequencyEntry& e : ck.keywords.entries)
      csv.row({ck.category, e.key, std::to_string(e.count)});
  return csv.str();
}

}  // namespace biblio
