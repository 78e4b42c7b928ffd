#pragma once

#include <cstdint>
#include <ostream>

#include "k3/checked.hpp"

namespace k3 {

// Exact rational with int64 numerator/denominator, always normalized:
// den > 0 and gcd(|num|, den) = 1. Arithmetic is overflow-checked.
struct Rational {
  int64_t num{0};
  int64_t den{1};

  Rational() = default;
  Rational(int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, "rational with zero denominator");
    if (den < 0) {
      num = neg64(num);
      den = neg64(den);
    }
    int64_t g = gcd64(abs64(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

  int64_t as_integer(const char* what = "rational") const {
    ensure(den == 1, std::string("expected integral value in ") + what);
    return num;
  }

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(add64(mul64(a.num, b.den), mul64(b.num, a.den)), mul64(a.den, b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(sub64(mul64(a.num, b.den), mul64(b.num, a.den)), mul64(a.den, b.den));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mul64(a.num, b.num), mul64(a.den, b.den));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num != 0, "division by zero rational");
    return Rational(mul64(a.num, b.den), mul64(a.den, b.num));
  }
  Rational operator-() const { return Rational(neg64(num), den); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // Cross-multiplied in __int128, so comparisons never overflow.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    os << x.num;
    if (x.den != 1) os << '/' << x.den;
    return os;
  }
};

}  // namespace k3
