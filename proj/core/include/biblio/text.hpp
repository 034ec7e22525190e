#ifndef BIBLIO_TEXT_HPP
#define BIBLIO_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace biblio::text {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Trims and collapses internal whitespace runs to a single space.
inline std::string collapse_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.push_back(c);
    }
  }
  return out;
}

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return out;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Splits on `sep`; pieces are trimmed and empty pieces dropped.
inline std::vector<std::string> split_trim(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::string piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(std::move(piece));
      start = i + 1;
    }
  }
  return out;
}

// Like split_trim but only splits at bracket depth zero. Address fields may
// embed author groups in square brackets that themselves contain the
// separator.
inline std::vector<std::string> split_trim_bracket_aware(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '[') ++depth;
    if (i < s.size() && s[i] == ']' && depth > 0) --depth;
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      std::string piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(std::move(piece));
      start = i + 1;
    }
  }
  return out;
}

inline bool is_edge_punct(char c) {
  switch (c) {
    case '"': case '\'': case '.': case ',': case ';': case ':':
    case '!': case '?': case '(': case ')': case '[': case ']':
    case '{': case '}': case '*': case '`':
      return true;
    default:
      return false;
  }
}

// Strips punctuation from both ends; interior punctuation is kept.
inline std::string strip_punct_edges(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (is_space(s[b]) || is_edge_punct(s[b]))) ++b;
  while (e > b && (is_space(s[e - 1]) || is_edge_punct(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace biblio::text

#endif  // BIBLIO_TEXT_HPP
