#ifndef BIBLIO_ERRORS_HPP
#define BIBLIO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biblio {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unusable input: empty file, record block without terminator, tag line too
// short, duplicate record id in strict mode. Carries the 1-based line number
// when one is known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line ? message + " (line " + std::to_string(line) + ")" : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An argument outside an operation's domain: empty corpus, empty list,
// citation rank outside [1, N], target count missing from a peer set.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace biblio

#endif  // BIBLIO_ERRORS_HPP
