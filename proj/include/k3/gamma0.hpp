#pragma once

#include <cstdint>

#include "k3/errors.hpp"

namespace k3 {

// Numerical invariants of the modular curve Y0(n) = H/Gamma0(n).
struct InvariantTable {
  int64_t n{1};
  int64_t mu{1};      // index [PSL(2,Z) : Gamma0(n)]
  int64_t nu2{1};     // elliptic points of order 2
  int64_t nu3{1};     // elliptic points of order 3
  int64_t nu_inf{1};  // cusps
  int64_t genus{0};
};

// Closed-form evaluation:
//   mu     = n * prod_{p|n} (1 + 1/p)
//   nu2    = 0 if 4|n, else prod_{p|n} (1 + (-1|p))
//   nu3    = 0 if 9|n, else prod_{p|n} (1 + (-3|p))
//   nu_inf = sum_{d|n} phi(gcd(d, n/d))
//   genus  = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2   (must come out integral)
InvariantTable gamma0_invariants(int64_t n);

// Independent check: elliptic points of order 2 (resp. 3) of Gamma0(n) are in
// bijection with solutions of x^2 + 1 = 0 (resp. x^2 + x + 1 = 0) mod n.
// Counted by brute force; deliberately shares no code with the formulas.
int64_t elliptic_congruence_oracle(int64_t n, int order);

}  // namespace k3
