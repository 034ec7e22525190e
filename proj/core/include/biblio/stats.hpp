#ifndef BIBLIO_STATS_HPP
#define BIBLIO_STATS_HPP

#include <string>
#include <vector>

#include "biblio/rational.hpp"
#include "biblio/record.hpp"

namespace biblio {

// A ranked frequency table: entries sorted by count descending, then key
// ascending; percent is the exact fraction count/total. For multi-assignment
// fields (categories) the percents may sum past 1.
struct FrequencyEntry {
  std::string key;
  std::size_t count = 0;
  Rational percent;
};

struct FrequencyTable {
  std::vector<FrequencyEntry> entries;
  std::size_t total = 0;
};

struct AuthorshipSummary {
  std::size_t papers_counted = 0;  // records with at least one author
  std::size_t distinct_authors = 0;
  Rational mean_authors_per_paper;
  std::size_t modal_authors_per_paper = 0;  // smallest class on ties
  std::size_t single_author_papers = 0;
  Rational single_author_fraction;
  std::size_t max_authors = 0;
};

struct CooperationTable {
  FrequencyTable foreign;  // papers per foreign country, total = corpus size
  std::size_t international_papers = 0;
  std::size_t total_papers = 0;
  Rational international_fraction;
};

enum class RecordField { journal, category };

FrequencyTable doc_type_distribution(const Corpus& corpus);
FrequencyTable yearly_counts(const Corpus& corpus);

// Records without authors are excluded and reported into `warnings`.
AuthorshipSummary authorship_summary(const Corpus& corpus,
                                     std::vector<std::string>* warnings = nullptr);

// A paper is international iff its country set contains `home_country` and at
// least one other country. Each international paper increments every foreign
// country it involves.
CooperationTable cooperation_table(const Corpus& corpus, const std::string& home_country,
                                   std::vector<std::string>* warnings = nullptr);

// journal: one count per record; category: a record counts once in each of
// its categories.
FrequencyTable field_distribution(const Corpus& corpus, RecordField field);

std::string to_csv(const FrequencyTable& table, std::string_view key_header);
std::string to_csv(const AuthorshipSummary& summary);
std::string to_csv(const CooperationTable& table);
std::string cooperation_summary_csv(const CooperationTable& table);

}  // namespace biblio

#endif  // BIBLIO_STATS_HPP
