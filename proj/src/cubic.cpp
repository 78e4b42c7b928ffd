#include "k3/cubic.hpp"

#include "k3/arith.hpp"
#include "k3/checked.hpp"
#include "k3/errors.hpp"
#include "k3/gamma0.hpp"

namespace k3 {

CubicVerdict cubic_verdict(int64_t two_n) {
  require(two_n >= 2, "degree must be at least 2");
  require(two_n % 2 == 0, "degree must be even");
  const int64_t n = two_n / 2;
  CubicVerdict out;
  out.degree = two_n;
  out.hassett_nonempty =
      two_n >= 8 && (mod64(two_n, 6) == 0 || mod64(two_n, 6) == 2);
  out.k3_divisibility = [&] {
    if (mod64(two_n, 4) == 0 || mod64(two_n, 9) == 0) return false;
    for (const auto& [p, e] : factorize(two_n).factors)
      if (p != 2 && mod64(p, 3) == 2) return false;
    return true;
  }();
  out.has_associated_cubic = out.hassett_nonempty && out.k3_divisibility;
  out.nu3 = gamma0_invariants(n).nu3;
  ensure(out.has_associated_cubic == (n >= 7 && out.nu3 > 0),
         "cubic existence must match n >= 7 with nu3 > 0");
  out.special_nodal_degree_2 = (two_n == 2);
  return out;
}

}  // namespace k3
