#pragma once

#include <cstdint>
#include <vector>

#include "k3/gamma0.hpp"

namespace k3 {

// Census of the points of the Fricke quotient Y0+(n) that are images of
// (-2)-classes: for each such point, the order of its stabilizer.
struct MinusTwoCensus {
  int64_t count{0};
  std::vector<int64_t> orders;
};

// Numerical invariants of Y0+(n) = Y0(n) / (Fricke involution).
struct FrickeTable {
  int64_t n{1};
  int64_t xi{0};          // class-number combination counting fixed points
  int64_t nu2_plus{0};    // elliptic points of order 2
  int64_t nu3_plus{0};    // order 3
  int64_t nu4_plus{0};    // order 4 (only n = 2)
  int64_t nu6_plus{0};    // order 6 (only n = 3)
  int64_t nu_inf_plus{0};
  int64_t genus_plus{0};
  MinusTwoCensus minus_two;
};

// xi(n) = h(-4n) for n != 3 mod 4, and h(-n) + h(-4n) for n = 3 mod 4.
// This counts the fixed points of the Fricke involution on Y0(n).
int64_t xi(int64_t n);

// For n >= 5:
//   nu2+ = nu2/2 + xi,  nu3+ = nu3/2,  nu_inf+ = nu_inf/2,
//   2 g+ = g + 1 - xi/2,
// every halving checked to be exact. The (-2)-census is xi points of order 2.
// For n <= 4 the quotients are hand-tabulated:
//   n=1: nu2+ = nu3+ = nu_inf+ = 1, census {order 2}
//   n=2: nu2+ = nu4+ = nu_inf+ = 1, census {order 2}
//   n=3: nu2+ = nu6+ = nu_inf+ = 1, census {orders 2, 6}
//   n=4: nu2+ = 1, nu_inf+ = 2,     census {order 2}
// (xi is still reported for n <= 4 but enters no formula there; the halving
// formulas are not valid below n = 5.)
FrickeTable fricke_invariants(int64_t n);

}  // namespace k3
