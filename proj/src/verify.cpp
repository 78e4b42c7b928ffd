#include "k3/verify.hpp"

#include <algorithm>

#include "k3/counting.hpp"
#include "k3/cubic.hpp"
#include "k3/errors.hpp"
#include "k3/fricke.hpp"
#include "k3/gamma0.hpp"

namespace k3 {

namespace {

// run one predicate per level, counting exceptions as failures
template <typename F>
SweepResult sweep(const char* name, int64_t lo, int64_t hi, F&& f) {
  SweepResult r;
  r.name = name;
  for (int64_t n = lo; n <= hi; ++n) {
    ++r.checked;
    bool ok = false;
    try {
      ok = f(n);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++r.failures;
  }
  return r;
}

}  // namespace

std::vector<SweepResult> run_sweeps(int64_t max_n) {
  require(max_n >= 5, "sweep range must reach at least 5");
  std::vector<SweepResult> out;

  out.push_back(sweep("gamma0-elliptic-oracle", 1, max_n, [](int64_t n) {
    const InvariantTable t = gamma0_invariants(n);
    return t.nu2 == elliptic_congruence_oracle(n, 2) &&
           t.nu3 == elliptic_congruence_oracle(n, 3);
  }));

  out.push_back(sweep("parity", 5, max_n, [](int64_t n) {
    const InvariantTable t = gamma0_invariants(n);
    return t.nu2 % 2 == 0 && t.nu3 % 2 == 0 && t.nu_inf % 2 == 0 &&
           t.genus >= 0;
  }));

  out.push_back(sweep("riemann-hurwitz", 2, max_n, [](int64_t n) {
    const InvariantTable t = gamma0_invariants(n);
    const FrickeTable ft = fricke_invariants(n);
    if (n >= 5 && ft.xi % 2 != 0) return false;
    const int64_t ram = n >= 5 ? ft.xi : 2;
    return 2 * t.genus - 2 == 2 * (2 * ft.genus_plus - 2) + ram;
  }));

  out.push_back(sweep("minus-two-census", 1, max_n, [](int64_t n) {
    const FrickeTable ft = fricke_invariants(n);
    if (ft.minus_two.count != ft.xi) return false;
    if (static_cast<int64_t>(ft.minus_two.orders.size()) != ft.xi)
      return false;
    if (n == 3) return ft.minus_two.orders == std::vector<int64_t>{2, 6};
    return std::all_of(ft.minus_two.orders.begin(), ft.minus_two.orders.end(),
                       [](int64_t o) { return o == 2; });
  }));

  out.push_back(sweep("count-agreement", 1, max_n, [](int64_t n) {
    const SubgroupCount c = count_subgroups_mod2(2 * n);
    if (c.involution_classes != c.z2_mod2_classes) return false;
    if (n < 5) return true;  // tabulated levels, nothing further to compare
    const InvariantTable t = gamma0_invariants(n);
    return 2 * c.z2_mod2_classes == t.nu2 && 2 * c.z3_mod2_classes == t.nu3;
  }));

  out.push_back(sweep("cubic-equivalence", 1, max_n, [](int64_t n) {
    const CubicVerdict v = cubic_verdict(2 * n);
    const bool expected = n >= 7 && gamma0_invariants(n).nu3 > 0;
    return v.has_associated_cubic == expected &&
           v.has_associated_cubic == (v.hassett_nonempty && v.k3_divisibility);
  }));

  return out;
}

bool all_passed(const std::vector<SweepResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SweepResult& r) { return r.failures == 0; });
}

}  // namespace k3
