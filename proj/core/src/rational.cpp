#include "biblio/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "biblio/errors.hpp"

namespace biblio {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

// Reduces a 128-bit fraction and narrows it to a Rational.
Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num < kMin64 || num > kMax64 || den > kMax64)
    throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  i128 num = 0;
  i128 den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw DomainError("bad decimal: " + std::string(text));
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      any_digit = true;
      if (num > kMax64 || den > kMax64) throw std::overflow_error("decimal too large");
    } else {
      throw DomainError("bad decimal: " + std::string(text));
    }
  }
  if (!any_digit) throw DomainError("bad decimal: " + std::string(text));
  return make_reduced(neg ? -num : num, den);
}

std::string Rational::to_decimal(int places) const {
  i128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  i128 n = num_ < 0 ? -static_cast<i128>(num_) : static_cast<i128>(num_);
  i128 scaled = n * scale;
  i128 q = scaled / den_;
  i128 r = scaled % den_;
  if (2 * r >= den_) ++q;  // half away from zero
  i128 whole = q / scale;
  i128 frac = q % scale;

  std::string out;
  if (num_ < 0 && q != 0) out.push_back('-');
  out += std::to_string(static_cast<long long>(whole));
  if (places > 0) {
    std::string f = std::to_string(static_cast<long long>(frac));
    out.push_back('.');
    out.append(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  *this = make_reduced(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

}  // namespace biblio
