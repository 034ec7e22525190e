#ifndef BIBLIO_PARSER_HPP
#define BIBLIO_PARSER_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "biblio/countries.hpp"
#include "biblio/record.hpp"

namespace biblio {

// Field-tagged flat file dialect:
//   - optional FN/VR header lines,
//   - records as `XX value` lines (two-character tag, one space, value),
//   - continuation lines begin with three spaces and join with one space,
//   - `ER` terminates a record, `EF` terminates the file,
//   - list fields (AU, DE, ID, C1, WC) split on ';'.
//
// Lenient mode (default) skips malformed records with a warning; strict mode
// throws ParseError at the first problem. Input must be UTF-8; other byte
// sequences are decoded as Latin-1 with a warning.

struct ParseOptions {
  bool strict = false;
  std::string source_name = "input";        // used in messages and synthesized ids
  const CountryTable* countries = nullptr;  // nullptr -> CountryTable::builtin()
};

struct ParseReport {
  std::vector<std::string> warnings;
  std::size_t records_skipped = 0;
};

Corpus parse_export(std::string_view bytes, const ParseOptions& opts = {},
                    ParseReport* report = nullptr);
Corpus parse_export_file(const std::filesystem::path& file, const ParseOptions& opts = {},
                         ParseReport* report = nullptr);

// Concatenates corpora in order, enforcing id uniqueness across the result.
Corpus merge_corpora(std::vector<Corpus> parts, bool strict, ParseReport* report = nullptr);

// Writes the corpus back to the tagged format (UT/DT/AU/SO/PY/DE/ID/C1/WC/TC).
// Re-parsing the result yields field-identical records.
std::string serialize_tagged(const Corpus& corpus);

// Canonical line-delimited dump: one JSON object per record, fixed key order.
std::string dump_jsonl(const Corpus& corpus);

// Records with doc_type ARTICLE and year within [year_min, year_max],
// original order preserved. Bounds are inclusive.
Corpus filter_research_articles(const Corpus& corpus, int year_min, int year_max);

// Year window only, any document type.
Corpus filter_year_range(const Corpus& corpus, int year_min, int year_max);

}  // namespace biblio

#endif  // BIBLIO_PARSER_HPP
