#pragma once

#include <cstdint>

namespace k3 {

// Existence of a cubic fourfold whose K3 category matches a degree-2n K3
// surface, split into the two classical conditions on d = 2n:
//   hassett_nonempty   d >= 8 and d = 0 or 2 mod 6  (the divisor C_d exists)
//   k3_divisibility    4 and 9 do not divide d, and no odd prime p = 2 mod 3
//                      divides d  (C_d parametrizes cubics with a K3 partner)
// Their conjunction is has_associated_cubic; for d = 2n it coincides with
// n >= 7 and nu3(n) > 0, and that identity is re-checked on every call.
struct CubicVerdict {
  int64_t degree{2};
  bool hassett_nonempty{false};
  bool k3_divisibility{false};
  bool has_associated_cubic{false};
  int64_t nu3{0};
  // degree 2 only: the classical substitute is a nodal (singular) cubic
  // fourfold, not a smooth one
  bool special_nodal_degree_2{false};
};

CubicVerdict cubic_verdict(int64_t two_n);

}  // namespace k3
