#include "biblio/stats.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "biblio/csv.hpp"
#include "biblio/errors.hpp"

namespace biblio {

namespace {

FrequencyTable make_table(const std::map<std::string, std::size_t>& counts, std::size_t total) {
  FrequencyTable table;
  table.total = total;
  table.entries.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    FrequencyEntry e;
    e.key = key;
    e.count = count;
    e.percent = total ? Rational(static_cast<std::int64_t>(count),
                                 static_cast<std::int64_t>(total))
                      : Rational(0);
    table.entries.push_back(std::move(e));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const FrequencyEntry& a, const FrequencyEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.key < b.key;
            });
  return table;
}

void require_nonempty(const Corpus& corpus) {
  if (corpus.empty()) throw DomainError("empty corpus");
}

}  // namespace

FrequencyTable doc_type_distribution(const Corpus& corpus) {
  require_nonempty(corpus);
  std::map<std::string, std::size_t> counts;
  for (const BiblioRecord& rec : corpus.records) ++counts[rec.doc_type];
  return make_table(counts, corpus.size());
}

FrequencyTable yearly_counts(const Corpus& corpus) {
  require_nonempty(corpus);
  std::map<std::string, std::size_t> counts;
  for (const BiblioRecord& rec : corpus.records) ++counts[std::to_string(rec.year)];
  return make_table(counts, corpus.size());
}

AuthorshipSummary authorship_summary(const Corpus& corpus, std::vector<std::string>* warnings) {
  require_nonempty(corpus);
  AuthorshipSummary s;
  std::set<std::string> distinct;
  std::map<std::size_t, std::size_t> class_counts;  // authors per paper -> papers
  std::size_t author_slots = 0;
  for (const BiblioRecord& rec : corpus.records) {
    if (rec.authors.empty()) {
      if (warnings)
        warnings->push_back("record " + rec.id + " has no authors; excluded from summary");
      continue;
    }
    ++s.papers_counted;
    author_slots += rec.authors.size();
    ++class_counts[rec.authors.size()];
    if (rec.authors.size() == 1) ++s.single_author_papers;
    s.max_authors = std::max(s.max_authors, rec.authors.size());
    for (const std::string& a : rec.authors) distinct.insert(a);
  }
  if (s.papers_counted == 0) throw DomainError("no records with authors");
  s.distinct_authors = distinct.size();
  s.mean_authors_per_paper = Rational(static_cast<std::int64_t>(author_slots),
                                      static_cast<std::int64_t>(s.papers_counted));
  std::size_t best = 0;
  for (const auto& [cls, n] : class_counts)
    if (n > best) {
      best = n;
      s.modal_authors_per_paper = cls;  // map order gives the smallest class on ties
    }
  s.single_author_fraction = Rational(static_cast<std::int64_t>(s.single_author_papers),
                                      static_cast<std::int64_t>(s.papers_counted));
  return s;
}

CooperationTable cooperation_table(const Corpus& corpus, const std::string& home_country,
                                   std::vector<std::string>* warnings) {
  require_nonempty(corpus);
  const std::string home = text::to_upper(text::collapse_ws(home_country));
  CooperationTable t;
  t.total_papers = corpus.size();
  std::map<std::string, std::size_t> counts;
  bool home_seen = false;
  for (const BiblioRecord& rec : corpus.records) {
    if (!rec.countries.count(home)) continue;
    home_seen = true;
    if (rec.countries.size() < 2) continue;
    ++t.international_papers;
    for (const std::string& c : rec.countries)
      if (c != home) ++counts[c];
  }
  if (!home_seen && warnings)
    warnings->push_back("home country " + home + " does not appear in any record");
  t.foreign = make_table(counts, t.total_papers);
  t.international_fraction = Rational(static_cast<std::int64_t>(t.international_papers),
                                      static_cast<std::int64_t>(t.total_papers));
  return t;
}

FrequencyTable field_distribution(const Corpus& corpus, RecordField field) {
  require_nonempty(corpus);
  std::map<std::string, std::size_t> counts;
  for (const BiblioRecord& rec : corpus.records) {
    if (field == RecordField::journal) {
      if (!rec.journal.empty()) ++counts[rec.journal];
    } else {
      std::set<std::string> unique(rec.categories.begin(), rec.categories.end());
      for (const std::string& c : unique) ++counts[c];
    }
  }
  return make_table(counts, corpus.size());
}

std::string to_csv(const FrequencyTable& table, std::string_view key_header) {
  CsvBuilder csv;
  csv.row({key_header, "count", "percent"});
  for (const FrequencyEntry& e : table.entries)
    csv.row({e.key, std::to_string(e.count), (e.percent * 100).to_decimal(1)});
  return csv.str();
}

std::string to_csv(const AuthorshipSummary& s) {
  CsvBuilder csv;
  csv.row({"papers", "distinct_authors", "mean_authors_per_paper", "modal_authors_per_paper",
           "single_author_papers", "single_author_percent", "max_authors"});
  csv.row({std::to_string(s.papers_counted), std::to_string(s.distinct_authors),
           s.mean_authors_per_paper.to_decimal(1), std::to_string(s.modal_authors_per_paper),
           std::to_string(s.single_author_papers),
           (s.single_author_fraction * 100).to_decimal(1), std::to_string(s.max_authors)});
  return csv.str();
}

std::string to_csv(const CooperationTable& table) {
  return to_csv(table.foreign, "country");
}

std::string cooperation_summary_csv(const CooperationTable& t) {
  CsvBuilder csv;
  csv.row({"international_papers", "total_papers", "international_percent"});
  csv.row({std::to_string(t.international_papers), std::to_string(t.total_papers),
           (t.international_fraction * 100).to_decimal(1)});
  return csv.str();
}

}  // namespace biblio
