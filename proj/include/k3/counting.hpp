#pragma once

#include <cstdint>
#include <vector>

#include "k3/errors.hpp"

namespace k3 {

// Conjugacy classes of involutions in Aut(D^b(X)) for X a K3 surface of
// degree 2n and Picard rank 1:
//   1                     if n = 1 or 2
//   0                     if 4 | n or some prime p = 3 mod 4 divides n
//   2^(a-1)               if n = 2^e * p1^k1 ... pa^ka, e <= 1, all pi = 1 mod 4
// For n >= 5 the value is checked against nu2(n)/2 on every call.
int64_t count_involution_classes(int64_t two_n);

// Symbolic factor of a free product decomposition. Z_ring and Z_check are
// infinite cyclic factors remembered with their geometric decoration (loops
// around a (-2)-point resp. around an ordinary puncture); Z is undecorated.
enum class FactorKind { Z2, Z3, Z4, Z6, Z, ZRing, ZCheck };

struct Factor {
  FactorKind kind;
  int64_t multiplicity;
  friend bool operator==(const Factor& a, const Factor& b) {
    return a.kind == b.kind && a.multiplicity == b.multiplicity;
  }
};

// A free product written as a multiset of factors; iota_quotient marks the
// one presentation (n = 1) stated only modulo the extra central involution.
struct FreeProductPresentation {
  std::vector<Factor> factors;
  bool iota_quotient{false};
};

enum class PresentationTarget { Pi1OrbQ0, FrickeGroup, AutsMod2 };

// Free product presentations attached to level n:
//   Pi1OrbQ0     orbifold fundamental group of the punctured quotient Q0+(n)
//   FrickeGroup  Gamma0+(n) itself
//   AutsMod2     symplectic autoequivalences modulo even shifts
FreeProductPresentation presentation(int64_t n, PresentationTarget which);

// ASCII names used in serialized output: Z2 Z3 Z4 Z6 Z Z_ring Z_check.
const char* factor_kind_name(FactorKind k);

enum class MaximalShape { Trivial, Z2, Z3, Z4, Z6 };

const char* maximal_shape_name(MaximalShape s);

// Finite subgroups of Aut(D^b(X))/Z[2]: every maximal one is G_s x Z2[1]
// with G_s on the listed shapes; the counts are conjugacy classes of
// subgroups isomorphic to Z2 x Z2[1] resp. Z3 x Z2[1].
struct SubgroupCount {
  int64_t degree{2};
  int64_t involution_classes{1};
  int64_t z2_mod2_classes{1};
  int64_t z3_mod2_classes{0};
  std::vector<MaximalShape> maximal_shapes;
  bool times_shift_z2{true};  // every maximal shape is crossed with Z2[1]
};

// The Z3 count follows the same multiplicative pattern with 3 in place of 4:
//   0        if 9 | n, some prime p = 2 mod 3 divides n, or n in {3, 4}
//   1        if n = 1 (the unique maximal Z6 x Z2[1] contains one Z3 class)
//   2^(a-1)  if n = 3^e * p1^k1 ... pa^ka, e <= 1, all pi = 1 mod 3
// For n >= 5 it is checked against nu3(n)/2 on every call.
SubgroupCount count_subgroups_mod2(int64_t two_n);

}  // namespace k3
