#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ramsey {

// Exact fraction over int64, kept in lowest terms with a positive denominator.
// Comparisons cross-multiply in 128-bit so they are never subject to rounding.
// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
// if a reduced result no longer fits; at the graph sizes handled here (<= 64
// vertices, <= 2016 edges) that never triggers.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = gcd64(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    const __int128 n = static_cast<__int128>(a.num_) * b.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide(n, d);
  }

  // Renders as "p/q" with the denominator always spelled out, e.g. "3/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(to_i64(s));
      }
      return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("Rational: value out of range in '" + s + "'");
    }
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
      const std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static std::int64_t to_i64(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty");
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace ramsey
