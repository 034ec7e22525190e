#ifndef BIBLIO_CSV_HPP
#define BIBLIO_CSV_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace biblio {

// RFC-4180 style: fields containing comma, quote, CR or LF are quoted,
// quotes are doubled.
std::string csv_field(std::string_view value);

class CsvBuilder {
 public:
  void row(std::initializer_list<std::string_view> cells);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  void append(std::string_view cell, bool first);
  std::string out_;
};

// Splits one CSV line into unquoted fields. Embedded newlines are not
// supported (inputs here are one record per line).
std::vector<std::string> parse_csv_line(std::string_view line);

}  // namespace biblio

#endif  // BIBLIO_CSV_HPP
