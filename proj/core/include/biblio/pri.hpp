#ifndef BIBLIO_PRI_HPP
#define BIBLIO_PRI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biblio/rational.hpp"
#include "biblio/record.hpp"

namespace biblio {

// All articles of one journal-year pair with their citation counts; the
// reference population for percentile rank indexing. Includes the target
// paper's own count.
struct PeerSet {
  std::string journal;
  int year = 0;
  std::vector<int> citation_counts;

  std::size_t size() const { return citation_counts.size(); }
};

struct PriScore {
  std::string paper_id;
  std::string journal;
  int year = 0;
  std::size_t peer_count = 0;  // N
  Rational rank;               // R, tie-averaged, 1 = most cited
  Rational pri;                // (N - R + 1) / N * 100, in (0, 100]
};

// Tie-averaged citation ranks aligned to the input order: rank 1 is the most
// cited; tied values share the average of the positions they span. The rank
// sum is exactly N(N+1)/2.
std::vector<Rational> rank_with_ties(const std::vector<int>& citation_counts);

// Rank per distinct citation value (same rule), keyed by value.
std::map<int, Rational> tie_ranks_by_value(const std::vector<int>& citation_counts);

// PRI formula. Requires n >= 1 and rank in [1, n].
Rational percentile_rank_index(std::size_t n, const Rational& rank);

// The target's citation count must appear in the peer set.
PriScore score_paper(int target_citations, const PeerSet& peers, std::string paper_id);

// Expected global mean PRI, 50 + 50/N, with N the peer-set size at the median
// position of the ascending-ordered size list (lower middle for even counts).
Rational global_average_pri(std::vector<std::size_t> peer_set_sizes);

struct PriRangeRow {
  std::string label;  // "PRI = 100" or "PRI >= <threshold>"
  std::size_t count = 0;
  Rational percent;   // fraction of all scores
};

// Cumulative counts of scores with pri >= threshold, one row per threshold
// (callers pass them descending). With include_exact_top a leading
// "PRI = 100" row reports the exact-100 scores separately.
std::vector<PriRangeRow> pri_range_summary(const std::vector<PriScore>& scores,
                                           const std::vector<Rational>& thresholds,
                                           bool include_exact_top = false);

// Peer sets grouped by (normalized journal, year).
class PeerIndex {
 public:
  // Adds every ARTICLE record of the corpus to its journal-year set.
  void add_corpus(const Corpus& corpus);
  // Minimal CSV form: journal,year,times_cited with an optional header row.
  void add_csv(std::string_view text, const std::string& source);

  const PeerSet* find(const std::string& journal, int year) const;
  std::vector<std::size_t> sizes() const;
  std::size_t set_count() const { return sets_.size(); }

 private:
  std::map<std::pair<std::string, int>, PeerSet> sets_;
};

struct UnscoredPaper {
  std::string paper_id;
  std::string journal;
  int year = 0;
  std::string reason;  // "no_peer_set" or "citation_count_not_in_peer_set"
};

struct ScoreResult {
  std::vector<PriScore> scores;      // ordered by paper_id
  std::vector<UnscoredPaper> unscored;
};

// Scores every record of `targets` against its journal-year peer set. Targets
// whose set is missing, or whose citation count is absent from it, are
// reported as unscored rather than dropped. Peer sets are ranked in parallel;
// the result order is deterministic (paper_id).
ScoreResult score_corpus(const Corpus& targets, const PeerIndex& peers, unsigned threads = 1);

std::string to_csv(const std::vector<PriScore>& scores);
std::string to_csv(const std::vector<UnscoredPaper>& unscored);
std::string to_csv(const std::vector<PriRangeRow>& rows);

}  // namespace biblio

#endif  // BIBLIO_PRI_HPP
