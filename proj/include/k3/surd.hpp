#pragma once

#include <cmath>
#include <ostream>

#include "k3/arith.hpp"
#include "k3/rational.hpp"

namespace k3 {

// Exact real quadratic number a + b*sqrt(m). Canonical form: m squarefree,
// m >= 1, and b = 0 whenever m = 1 (the square part of the radicand is folded
// into b, and rational values always carry radicand 1). Canonical forms are
// unique, so operator== is plain member comparison.
struct Surd {
  Rational a{0};
  Rational b{0};
  int64_t radicand{1};

  Surd() = default;
  Surd(Rational rational_value) : a(rational_value) {}  // NOLINT
  Surd(Rational a_, Rational b_, int64_t m) : a(a_), b(b_), radicand(m) { normalize(); }

  void normalize() {
    require(radicand >= 1, "surd radicand must be positive");
    auto [k, m0] = squarefree_decompose(radicand);
    b = b * Rational(k);
    radicand = m0;
    if (radicand == 1) {
      a = a + b;
      b = Rational(0);
    }
    if (b.is_zero()) radicand = 1;
  }

  // sqrt of a nonnegative rational x = p/q as (sqrt(p*q))/q.
  static Surd sqrt_of(const Rational& x) {
    require(x.sign() >= 0, "sqrt of negative rational");
    if (x.is_zero()) return Surd();
    return Surd(Rational(0), Rational(1, x.den), mul64(x.num, x.den));
  }

  bool is_rational() const { return b.is_zero(); }
  Rational rational_value(const char* what = "surd") const {
    ensure(is_rational(), std::string("expected rational value in ") + what);
    return a;
  }

  double approx() const {
    return a.approx() + b.approx() * std::sqrt(static_cast<double>(radicand));
  }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a == y.a && x.b == y.b && x.radicand == y.radicand;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

  Surd operator-() const { return Surd(-a, -b, radicand); }

  friend Surd operator+(const Surd& x, const Surd& y) {
    if (x.is_rational()) return Surd(x.a + y.a, y.b, y.radicand);
    if (y.is_rational()) return Surd(x.a + y.a, x.b, x.radicand);
    ensure(x.radicand == y.radicand, "adding surds over different radicands");
    return Surd(x.a + y.a, x.b + y.b, x.radicand);
  }
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

  friend Surd operator*(const Surd& x, const Surd& y) {
    if (x.is_rational()) return Surd(x.a * y.a, x.a * y.b, y.radicand);
    if (y.is_rational()) return Surd(y.a * x.a, y.a * x.b, x.radicand);
    ensure(x.radicand == y.radicand, "multiplying surds over different radicands");
    Rational m(x.radicand);
    return Surd(x.a * y.a + x.b * y.b * m, x.a * y.b + x.b * y.a, x.radicand);
  }

  friend Surd operator/(const Surd& x, const Surd& y) {
    if (y.is_rational()) {
      require(!y.a.is_zero(), "division by zero surd");
      return Surd(x.a / y.a, x.b / y.a, x.radicand);
    }
    // 1/(a + b sqrt m) = (a - b sqrt m)/(a^2 - b^2 m); the norm is nonzero
    // because sqrt(m) is irrational for squarefree m > 1.
    Rational norm = y.a * y.a - y.b * y.b * Rational(y.radicand);
    ensure(!norm.is_zero(), "zero norm in surd division");
    return x * Surd(y.a / norm, -(y.b / norm), y.radicand);
  }

  // Exact sign of a + b*sqrt(m), by squaring where needed.
  int sign() const {
    if (b.is_zero()) return a.sign();
    if (a.sign() >= 0 && b.sign() > 0) return 1;
    if (a.sign() <= 0 && b.sign() < 0) return -1;
    // a and b have strictly opposite signs here.
    Rational lhs = a * a;
    Rational rhs = b * b * Rational(radicand);
    if (lhs == rhs) return 0;
    bool a_dominates = lhs > rhs;
    return a_dominates ? a.sign() : b.sign();
  }

  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }

  friend std::ostream& operator<<(std::ostream& os, const Surd& x) {
    os << x.a;
    if (!x.b.is_zero()) os << " + " << x.b << "*sqrt(" << x.radicand << ")";
    return os;
  }
};

}  // namespace k3
