#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace solvcheeger {

/// Exact rational scalar on 64-bit numerator/denominator, always reduced,
/// denominator positive. Intermediates run through 128 bits; a result that
/// does not fit 64 bits after reduction throws std::overflow_error.
/// Intended for structure constants and classification, where entries stay
/// small; numeric sweeps use double.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { assign(n, d); }

  /// Accepts "p/q", plain integers, and finite decimals ("-3", "0.25").
  static Rational from_string(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const { return make_reduced(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduce128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return reduce128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return reduce128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long narrow(i128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
      throw std::overflow_error("rational arithmetic overflow (64-bit)");
    return static_cast<long long>(v);
  }

  static Rational reduce128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    i128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
  }

  static Rational make_reduced(long long n, long long d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  void assign(long long n, long long d) { *this = reduce128(n, d); }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

inline Rational Rational::from_string(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("empty rational literal");
  std::string s = text.substr(begin, end - begin + 1);

  auto parse_int = [](const std::string& t) -> long long {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad integer literal \"" + t + "\"");
    return v;
  };

  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    long long p = parse_int(s.substr(0, slash));
    long long q = parse_int(s.substr(slash + 1));
    return Rational(p, q);
  }
  std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad decimal literal \"" + s + "\"");
    bool negative = !head.empty() && head[0] == '-';
    long long ip = (head == "-" || head.empty()) ? 0 : parse_int(head);
    Rational r(ip < 0 ? -ip : ip, 1);
    Rational den(1);
    for (char c : frac) {
      den = den * Rational(10);
      r = r * Rational(10) + Rational(c - '0');
    }
    r = r / den;
    return negative ? -r : r;
  }
  return Rational(parse_int(s), 1);
}

/// Exact square root when the reduced fraction is a perfect square of a
/// rational; used to report h exactly in rational mode.
inline bool exact_sqrt(const Rational& x, Rational& root) {
  if (x < Rational(0)) return false;
  auto isqrt = [](long long v) -> long long {
    if (v < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  long long sn = isqrt(x.num());
  long long sd = isqrt(x.den());
  if (sn * sn != x.num() || sd * sd != x.den()) return false;
  root = Rational(sn, sd);
  return true;
}

}  // namespace solvcheeger

namespace Eigen {

template <>
struct NumTraits<solvcheeger::Rational> {
  using Real = solvcheeger::Rational;
  using NonInteger = solvcheeger::Rational;
  using Literal = solvcheeger::Rational;
  using Nested = solvcheeger::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 18; }
  static inline Real highest() { return Real(std::numeric_limits<long long>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<long long>::min()); }
};

}  // namespace Eigen
