#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qstab {

// Exact rational number with 64-bit numerator and denominator in canonical
// form: denominator > 0, gcd(|numerator|, denominator) = 1.  All arithmetic
// runs through 128-bit intermediates; a result whose canonical form does not
// fit back into 64 bits throws std::overflow_error.
class rational {
public:
  rational() = default;
  rational(long long value) : num_(value) {}  // implicit: integers are rationals
  rational(long long numerator, long long denominator) {
    *this = make(numerator, denominator);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  friend rational operator-(const rational& a) {
    return make(-static_cast<i128>(a.num_), a.den_);
  }
  friend rational operator+(const rational& a, const rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }
  rational& operator*=(const rational& o) { return *this = *this * o; }
  rational& operator/=(const rational& o) { return *this = *this / o; }

  friend bool operator==(const rational&, const rational&) = default;
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static rational make(i128 n, i128 d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational: value does not fit in 64 bits");
    rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::string to_string(const rational& r) {
  std::string s = std::to_string(r.num());
  if (r.den() != 1) {
    s += '/';
    s += std::to_string(r.den());
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
  return os << to_string(r);
}

// Parses "p" or "p/q" with optional leading '-' on either part.
inline rational parse_rational(std::string_view text) {
  const auto parse_ll = [](std::string_view s) -> long long {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("rational: malformed literal '" + std::string(s) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational(parse_ll(text));
  return rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

}  // namespace qstab
