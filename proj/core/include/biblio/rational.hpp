#ifndef BIBLIO_RATIONAL_HPP
#define BIBLIO_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace biblio {

// Exact rational number on 64-bit numerator/denominator, kept normalized
// (denominator > 0, gcd(|num|, den) == 1). All arithmetic runs through
// 128-bit intermediates and throws std::overflow_error if a reduced result
// does not fit; comparisons are exact. Ranks, percentile values and table
// percentages stay in this type until formatted for output.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(std::int64_t num, std::int64_t den);

  // Parses "12", "-3.5", "50.33" (plain decimal notation only).
  static Rational from_decimal(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Decimal string with `places` fractional digits, rounding half away
  // from zero. Exact integer arithmetic, no double round-trip.
  std::string to_decimal(int places) const;

  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace biblio

#endif  // BIBLIO_RATIONAL_HPP
