#include "biblio/pri.hpp"

#include <algorithm>

#include "biblio/csv.hpp"
#include "biblio/errors.hpp"
#include "biblio/parallel.hpp"
#include "biblio/text.hpp"

namespace biblio {

std::map<int, Rational> tie_ranks_by_value(const std::vector<int>& citation_counts) {
  if (citation_counts.empty()) throw DomainError("empty citation list");
  std::vector<int> sorted = citation_counts;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  std::map<int, Rational> ranks;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    // Positions i+1 .. j (1-based) share the average rank (i+1 + j) / 2.
    ranks.emplace(sorted[i], Rational(static_cast<std::int64_t>(i + 1 + j), 2));
    i = j;
  }
  return ranks;
}

std::vector<Rational> rank_with_ties(const std::vector<int>& citation_counts) {
  auto by_value = tie_ranks_by_value(citation_counts);
  std::vector<Rational> out;
  out.reserve(citation_counts.size());
  for (int c : citation_counts) out.push_back(by_value.at(c));
  return out;
}

Rational percentile_rank_index(std::size_t n, const Rational& rank) {
  if (n < 1) throw DomainError("peer set size must be at least 1");
  const Rational big_n(static_cast<std::int64_t>(n));
  if (rank < Rational(1) || rank > big_n)
    throw DomainError("citation rank outside [1, N]");
  return (big_n - rank + Rational(1)) / big_n * Rational(100);
}

PriScore score_paper(int target_citations, const PeerSet& peers, std::string paper_id) {
  if (peers.citation_counts.empty()) throw DomainError("empty peer set");
  auto ranks = tie_ranks_by_value(peers.citation_counts);
  auto it = ranks.find(target_citations);
  if (it == ranks.end()) throw DomainError("target citation count not in peer set");
  PriScore s;
  s.paper_id = std::move(paper_id);
  s.journal = peers.journal;
  s.year = peers.year;
  s.peer_count = peers.size();
  s.rank = it->second;
  s.pri = percentile_rank_index(s.peer_count, s.rank);
  return s;
}

Rational global_average_pri(std::vector<std::size_t> peer_set_sizes) {
  if (peer_set_sizes.empty()) throw DomainError("empty peer set size list");
  std::sort(peer_set_sizes.begin(), peer_set_sizes.end());
  // Lower-middle element for even counts, middle element for odd.
  const std::size_t median = peer_set_sizes[(peer_set_sizes.size() - 1) / 2];
  if (median < 1) throw DomainError("peer set size must be at least 1");
  return Rational(50) + Rational(50, static_cast<std::int64_t>(median));
}

std::vector<PriRangeRow> pri_range_summary(const std::vector<PriScore>& scores,
                                           const std::vector<Rational>& thresholds,
                                           bool include_exact_top) {
  std::vector<PriRangeRow> rows;
  const std::size_t total = scores.size();
  auto percent = [total](std::size_t count) {
    return total ? Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(total))
                 : Rational(0);
  };
  if (include_exact_top) {
    std::size_t count = 0;
    for (const PriScore& s : scores)
      if (s.pri == Rational(100)) ++count;
    rows.push_back({"PRI = 100", count, percent(count)});
  }
  for (const Rational& t : thresholds) {
    std::size_t count = 0;
    for (const PriScore& s : scores)
      if (s.pri >= t) ++count;
    std::string label =
        "PRI >= " + (t.is_integer() ? t.to_decimal(0) : t.to_decimal(2));
    rows.push_back({std::move(label), count, percent(count)});
  }
  return rows;
}

void PeerIndex::add_corpus(const Corpus& corpus) {
  for (const BiblioRecord& rec : corpus.records) {
    if (rec.doc_type != "ARTICLE") continue;
    PeerSet& set = sets_[{rec.journal, rec.year}];
    if (set.citation_counts.empty()) {
      set.journal = rec.journal;
      set.year = rec.year;
    }
    set.citation_counts.push_back(rec.times_cited);
  }
}

void PeerIndex::add_csv(std::string_view content, const std::string& source) {
  std::size_t start = 0;
  std::size_t line_no = 0;
  for (std::size_t i = 0; i <= content.size(); ++i) {
    if (i != content.size() && content[i] != '\n') continue;
    if (i == content.size() && start == i) break;
    ++line_no;
    std::string_view line = content.substr(start, i - start);
    start = i + 1;
    if (text::trim(line).empty()) continue;
    auto cells = parse_csv_line(line);
    if (cells.size() != 3)
      throw ParseError(source + ": peer CSV row needs journal,year,times_cited", line_no);
    std::string journal = normalize_journal(cells[0]);
    int year = 0, cited = 0;
    try {
      year = std::stoi(text::trim(cells[1]));
      cited = std::stoi(text::trim(cells[2]));
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header row
      throw ParseError(source + ": non-numeric peer CSV row", line_no);
    }
    if (cited < 0) throw ParseError(source + ": negative citation count", line_no);
    PeerSet& set = sets_[{journal, year}];
    if (set.citation_counts.empty()) {
      set.journal = journal;
      set.year = year;
    }
    set.citation_counts.push_back(cited);
  }
}

const PeerSet* PeerIndex::find(const std::string& journal, int year) const {
  auto it = sets_.find({journal, year});
  return it == sets_.end() ? nullptr : &it->second;
}

std::vector<std::size_t> PeerIndex::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(sets_.size());
  for (const auto& [key, set] : sets_) out.push_back(set.size());
  return out;
}

ScoreResult score_corpus(const Corpus& targets, const PeerIndex& peers, unsigned threads) {
  // Deterministic result order: targets sorted by paper id.
  std::vector<const BiblioRecord*> ordered;
  ordered.reserve(targets.size());
  for (const BiblioRecord& rec : targets.records) ordered.push_back(&rec);
  std::sort(ordered.begin(), ordered.end(),
            [](const BiblioRecord* a, const BiblioRecord* b) { return a->id < b->id; });

  struct Slot {
    bool scored = false;
    PriScore score;
    UnscoredPaper unscored;
  };
  std::vector<Slot> slots(ordered.size());

  // Peer sets are independent, so ranking may run in parallel; each target
  // writes only its own slot.
  parallel_chunks(ordered.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) {
      const BiblioRecord& rec = *ordered[i];
      const PeerSet* set = peers.find(rec.journal, rec.year);
      if (!set) {
        slots[i].unscored = {rec.id, rec.journal, rec.year, "no_peer_set"};
        continue;
      }
      try {
        slots[i].score = score_paper(rec.times_cited, *set, rec.id);
        slots[i].scored = true;
      } catch (const DomainError&) {
        slots[i].unscored = {rec.id, rec.journal, rec.year, "citation_count_not_in_peer_set"};
      }
    }
  });

  ScoreResult result;
  for (Slot& slot : slots) {
    if (slot.scored)
      result.scores.push_back(std::move(slot.score));
    else
      result.unscored.push_back(std::move(slot.unscored));
  }
  return result;
}

namespace {

std::string rank_text(const Rational& r) {
  return r.is_integer() ? r.to_decimal(0) : r.to_decimal(1);
}

}  // namespace

std::string to_csv(const std::vector<PriScore>& scores) {
  CsvBuilder csv;
  csv.row({"paper_id", "journal", "year", "N", "R", "PRI"});
  for (const PriScore& s : scores)
    csv.row({s.paper_id, s.journal, std::to_string(s.year), std::to_string(s.peer_count),
             rank_text(s.rank), s.pri.to_decimal(2)});
  return csv.str();
}

std::string to_csv(const std::vector<UnscoredPaper>& unscored) {
  CsvBuilder csv;
  csv.row({"paper_id", "journal", "year", "reason"});
  for (const UnscoredPaper& u : unscored)
    csv.row({u.paper_id, u.journal, std::to_string(u.year), u.reason});
  return csv.str();
}

std::string to_csv(const std::vector<PriRangeRow>& rows) {
  CsvBuilder csv;
  csv.row({"range", "count", "percent"});
  for (const PriRangeRow& r : rows)
    csv.row({r.label, std::to_string(r.count), (r.percent * 100).to_decimal(1)});
  return csv.str();
}

}  // namespace biblio
