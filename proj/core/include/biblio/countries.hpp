#ifndef BIBLIO_COUNTRIES_HPP
#define BIBLIO_COUNTRIES_HPP

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace biblio {

// Canonical country names plus an alias table (England -> UNITED KINGDOM,
// Peoples R China -> CHINA, Greenland -> DENMARK, ...). The built-in table
// mirrors data/countries.txt; a user file in the same format can replace it.
//
// File format: one entry per line, `NAME` for a canonical country or
// `ALIAS = NAME` for an alias. '#' starts a comment.
class CountryTable {
 public:
  static constexpr const char* kUnresolved = "UNRESOLVED";

  static const CountryTable& builtin();
  static CountryTable from_text(std::string_view text);
  static CountryTable load(const std::filesystem::path& file);

  // Resolves one ';'-separated address segment to a canonical country name.
  // The country is taken from the final comma-separated token; a token
  // ending in "USA" (state + ZIP form) resolves to USA. Returns kUnresolved
  // and sets *known=false when the token matches nothing.
  std::string resolve(std::string_view address_segment, bool* known = nullptr) const;

  bool is_canonical(std::string_view name) const;

 private:
  std::set<std::string, std::less<>> canonical_;
  std::map<std::string, std::string, std::less<>> aliases_;
};

}  // namespace biblio

#endif  // BIBLIO_COUNTRIES_HPP
