#ifndef BIBLIO_COWORD_HPP
#define BIBLIO_COWORD_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "biblio/rational.hpp"
#include "biblio/record.hpp"
#include "biblio/stats.hpp"

namespace biblio {

// Keyword set of one record: union of author keywords and keywords-plus,
// lowercased, whitespace collapsed, edge punctuation stripped. A term
// occurring in both fields counts once.
std::set<std::string> extract_keywords(const BiblioRecord& record);

// Undirected co-occurrence link between two keywords, a < b lexicographically.
// cosine = co_count / sqrt(freq_a * freq_b) (Salton index over record sets).
struct CoEdge {
  std::string a;
  std::string b;
  std::size_t co_count = 0;
  double cosine = 0.0;
};

struct CooccurrenceGraph {
  std::map<std::string, std::size_t> frequency;  // surviving terms only
  std::vector<CoEdge> edges;                     // sorted by (a, b)
  std::size_t record_count = 0;
};

// Frequencies are counted over per-record keyword sets; terms below
// min_frequency are removed before any edge is built. Record chunks may be
// counted in parallel; counts merge associatively so the result is
// schedule-independent.
CooccurrenceGraph build_graph(const Corpus& corpus, std::size_t min_frequency,
                              unsigned threads = 1);

enum class LinkAggregate { mean, sum };

struct Cluster {
  int number = 0;                       // 1-based creation order
  std::vector<std::string> terms;       // insertion order
  std::string label;                    // member with the highest linksum*frequency
  double density = 0.0;                 // aggregate over internal links
  double centrality = 0.0;              // aggregate over links to other clusters
  std::vector<CoEdge> internal_edges;   // both ends in this cluster, sorted by (a, b)
  std::vector<CoEdge> external_edges;   // one end here, other end in another cluster
};

struct ClusterSet {
  std::vector<Cluster> clusters;
  std::size_t eligible_edge_count = 0;  // edges at or above the cosine threshold
  Rational min_cosine;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  LinkAggregate aggregate = LinkAggregate::mean;
};

// Greedy single-linkage scan with a size cap. Edges with cosine >= min_cosine
// are visited in descending cosine order (ties in term-pair lexicographic
// order): two unclustered terms seed a new cluster; a term meets an existing
// cluster with room and joins it; a full cluster leaves the other term free
// to cluster through a later edge. Clusters below min_size are discarded and
// the survivors renumbered in creation order. Thresholding and ordering use
// exact integer arithmetic, so identical graphs give identical cluster sets.
ClusterSet cluster_graph(const CooccurrenceGraph& graph, const Rational& min_cosine,
                         std::size_t min_size, std::size_t max_size,
                         LinkAggregate aggregate = LinkAggregate::mean);

// Mean (or sum) of link cosines; 0 for an empty list.
double link_aggregate(const std::vector<CoEdge>& edges, LinkAggregate aggregate);

// Ranks members by (sum of internal link cosines) * corpus frequency and
// returns the argmax, ties broken lexicographically.
std::string label_cluster(const std::vector<std::string>& terms,
                          const std::vector<CoEdge>& internal_edges,
                          const std::map<std::string, std::size_t>& frequency);

struct CategoryKeywords {
  std::string category;
  std::size_t paper_count = 0;
  FrequencyTable keywords;  // total = paper_count
};

// Keyword frequency tables for the top_k categories by paper count. Each
// record's keyword set is attributed to every category of the record. The
// stop list suppresses rows here only; graph building is unaffected.
std::vector<CategoryKeywords> category_keywords(const Corpus& corpus, std::size_t top_k,
                                                const std::set<std::string>& stoplist = {});

// One normalized term per line, '#' comments.
std::set<std::string> parse_stoplist(std::string_view text);

std::string to_csv_terms(const CooccurrenceGraph& graph);
std::string to_csv_edges(const CooccurrenceGraph& graph);
std::string to_csv(const ClusterSet& set);
std::string to_csv(const std::vector<CategoryKeywords>& tables);

}  // namespace biblio

#endif  // BIBLIO_COWORD_HPP
