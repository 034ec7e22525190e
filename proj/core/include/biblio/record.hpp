#ifndef BIBLIO_RECORD_HPP
#define BIBLIO_RECORD_HPP

#include <set>
#include <string>
#include <vector>

#include "biblio/text.hpp"

namespace biblio {

// One parsed publication record. String fields are stored in canonical form:
// journal, document type, authors and categories uppercased with collapsed
// whitespace, keywords lowercased. `countries` holds canonical country names
// resolved from the address field (or UNRESOLVED for addresses the country
// table cannot place).
struct BiblioRecord {
  std::string id;                             // UT, unique within a corpus
  std::string doc_type;                       // DT, e.g. "ARTICLE"
  std::vector<std::string> authors;           // AU
  std::string journal;                        // SO
  int year = 0;                               // PY, within [1900, 2100]
  std::vector<std::string> author_keywords;   // DE
  std::vector<std::string> keywords_plus;     // ID
  std::set<std::string> countries;            // from C1
  std::vector<std::string> categories;        // WC
  int times_cited = 0;                        // TC, missing parses as 0

  bool operator==(const BiblioRecord&) const = default;
};

// An ordered set of records plus provenance. Immutable by convention once
// parsing has finished; all statistics functions take it by const reference.
struct Corpus {
  std::vector<BiblioRecord> records;
  std::vector<std::string> sources;  // input file names
  std::string parsed_at;             // ISO-8601, informational only

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// Author identity is the exact normalized string: uppercase, periods
// stripped, whitespace collapsed. No disambiguation beyond that.
inline std::string normalize_author(std::string_view name) {
  std::string no_dots;
  no_dots.reserve(name.size());
  for (char c : name)
    if (c != '.') no_dots.push_back(c);
  return text::to_upper(text::collapse_ws(no_dots));
}

inline std::string normalize_journal(std::string_view title) {
  return text::to_upper(text::collapse_ws(title));
}

inline std::string normalize_keyword(std::string_view term) {
  return text::to_lower(text::collapse_ws(term));
}

}  // namespace biblio

#endif  // BIBLIO_RECORD_HPP
