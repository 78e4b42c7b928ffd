#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3 {

struct SweepResult {
  std::string name;
  int64_t checked{0};
  int64_t failures{0};
};

// Cross-checks every closed formula against an independent computation for
// all levels n <= max_n. A failure in any sweep means a formula and its
// oracle disagree; run_sweeps never throws for in-range input, it counts.
//   gamma0-elliptic-oracle  nu2/nu3 vs brute-force congruence counts mod n
//   parity                  nu2, nu3, nu_inf all even for n >= 5
//   riemann-hurwitz         2g - 2 = 2(2g+ - 2) + ramification, xi even
//   minus-two-census        census size equals xi, orders as tabulated
//   count-agreement         subgroup counts vs nu2/2 and nu3/2
//   cubic-equivalence       Hassett-style conditions vs n >= 7 and nu3 > 0
std::vector<SweepResult> run_sweeps(int64_t max_n);

bool all_passed(const std::vector<SweepResult>& results);

}  // namespace k3
