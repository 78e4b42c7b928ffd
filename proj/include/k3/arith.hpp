#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "k3/errors.hpp"

namespace k3 {

struct Factorization {
  int64_t n{1};
  std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), primes ascending

  bool divisible_by(int64_t p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return true;
    return false;
  }
  int exponent_of(int64_t p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }
};

// Trial division. Inputs are desk scale (K3 degrees, form discriminants);
// anything past 10^14 is rejected rather than silently slow.
Factorization factorize(int64_t n);

// Kronecker-style quadratic symbol (a|m), m != 0, with the convention that
// the symbol vanishes at ramified primes: (a|2) = 0 unless a = 1 mod 4
// (so (-1|2) = 0, (-3|2) = -1). For odd m it is the Jacobi symbol. With this
// convention (a|.) is completely multiplicative and, for a in {-1, -3},
// agrees with the quadratic characters mod 4 and mod 3 that the elliptic
// point-count formulas need.
int kronecker(int64_t a, int64_t m);

// Class number h(D) for D < 0, D = 0 or 1 mod 4: the number of reduced
// primitive positive definite binary quadratic forms (a, b, c) of
// discriminant b^2 - 4ac = D, i.e. |b| <= a <= c with b >= 0 whenever
// |b| = a or a = c, and gcd(a, b, c) = 1. Enumerated a-first.
int64_t class_number(int64_t D);

// m = k^2 * m0 with m0 squarefree; returns (k, m0). m >= 1.
std::pair<int64_t, int64_t> squarefree_decompose(int64_t m);

}  // namespace k3
