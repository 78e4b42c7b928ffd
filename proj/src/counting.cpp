#include "k3/counting.hpp"

#include "k3/arith.hpp"
#include "k3/checked.hpp"
#include "k3/fricke.hpp"
#include "k3/gamma0.hpp"

namespace k3 {

namespace {

// 2^(a-1) branch of both counting formulas: n = q^e * p1 ... pa with e <= 1
// and every other prime in the residue class `good` mod `modulus`; returns
// -1 when some prime lands in a forbidden class (count 0), otherwise a.
int64_t good_prime_count(const Factorization& f, int64_t q, int64_t modulus,
                         int64_t good) {
  int64_t a = 0;
  for (const auto& [p, e] : f.factors) {
    if (p == q) continue;
    if (mod64(p, modulus) != good) return -1;
    ++a;
  }
  return a;
}

int64_t require_even_degree(int64_t two_n) {
  require(two_n >= 2, "degree must be at least 2");
  require(two_n % 2 == 0, "degree must be even");
  return two_n / 2;
}

}  // namespace

int64_t count_involution_classes(int64_t two_n) {
  const int64_t n = require_even_degree(two_n);
  const int64_t value = [&]() -> int64_t {
    if (n == 1 || n == 2) return 1;
    const Factorization f = factorize(n);
    if (f.exponent_of(2) >= 2) return 0;
    const int64_t a = good_prime_count(f, 2, 4, 1);
    if (a < 0) return 0;  // some odd prime is 3 mod 4
    ensure(a >= 1, "n >= 3 with 4-free even part has an odd prime factor");
    return int64_t{1} << (a - 1);
  }();
  if (n >= 5) {
    const InvariantTable t = gamma0_invariants(n);
    ensure(t.nu2 == 2 * value, "involution classes must equal nu2/2");
  }
  return value;
}

namespace {

int64_t count_z3_classes(int64_t n) {
  const int64_t value = [&]() -> int64_t {
    if (n == 1) return 1;
    if (n == 3 || n == 4) return 0;
    const Factorization f = factorize(n);
    if (f.exponent_of(3) >= 2) return 0;
    const int64_t a = good_prime_count(f, 3, 3, 1);
    if (a < 0) return 0;  // some prime is 2 mod 3
    ensure(a >= 1, "n >= 5 with 9-free 3-part has a prime = 1 mod 3");
    return int64_t{1} << (a - 1);
  }();
  if (n >= 5) {
    const InvariantTable t = gamma0_invariants(n);
    ensure(t.nu3 == 2 * value, "Z3 classes must equal nu3/2");
  }
  return value;
}

}  // namespace

SubgroupCount count_subgroups_mod2(int64_t two_n) {
  const int64_t n = require_even_degree(two_n);
  SubgroupCount out;
  out.degree = two_n;
  out.involution_classes = count_involution_classes(two_n);
  out.z2_mod2_classes = out.involution_classes;
  out.z3_mod2_classes = count_z3_classes(n);
  out.times_shift_z2 = true;
  if (n == 1) {
    out.maximal_shapes = {MaximalShape::Z6};
  } else if (n == 2) {
    out.maximal_shapes = {MaximalShape::Z4};
  } else if (n == 3 || n == 4) {
    out.maximal_shapes = {MaximalShape::Trivial};
  } else {
    if (out.z2_mod2_classes > 0) out.maximal_shapes.push_back(MaximalShape::Z2);
    if (out.z3_mod2_classes > 0) out.maximal_shapes.push_back(MaximalShape::Z3);
    if (out.maximal_shapes.empty())
      out.maximal_shapes.push_back(MaximalShape::Trivial);
  }
  return out;
}

namespace {

void push(std::vector<Factor>& v, FactorKind k, int64_t mult) {
  if (mult > 0) v.push_back(Factor{k, mult});
}

}  // namespace

const char* factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Z2: return "Z2";
    case FactorKind::Z3: return "Z3";
    case FactorKind::Z4: return "Z4";
    case FactorKind::Z6: return "Z6";
    case FactorKind::Z: return "Z";
    case FactorKind::ZRing: return "Z_ring";
    case FactorKind::ZCheck: return "Z_check";
  }
  throw InternalError("unknown factor kind");
}

const char* maximal_shape_name(MaximalShape s) {
  switch (s) {
    case MaximalShape::Trivial: return "1";
    case MaximalShape::Z2: return "Z2";
    case MaximalShape::Z3: return "Z3";
    case MaximalShape::Z4: return "Z4";
    case MaximalShape::Z6: return "Z6";
  }
  throw InternalError("unknown maximal shape");
}

FreeProductPresentation presentation(int64_t n, PresentationTarget which) {
  require(n >= 1, "level must be positive");
  FreeProductPresentation out;
  auto& fs = out.factors;
  if (n <= 4) {
    switch (which) {
      case PresentationTarget::Pi1OrbQ0:
        if (n == 1) {
          push(fs, FactorKind::Z3, 1);
          push(fs, FactorKind::ZRing, 1);
        } else if (n == 2) {
          push(fs, FactorKind::Z4, 1);
          push(fs, FactorKind::ZRing, 1);
        } else if (n == 3) {
          push(fs, FactorKind::ZRing, 2);
        } else {
          push(fs, FactorKind::ZRing, 1);
          push(fs, FactorKind::ZCheck, 1);
        }
        break;
      case PresentationTarget::FrickeGroup:
        if (n == 1) {
          push(fs, FactorKind::Z2, 1);
          push(fs, FactorKind::Z3, 1);
        } else if (n == 2) {
          push(fs, FactorKind::Z2, 1);
          push(fs, FactorKind::Z4, 1);
        } else if (n == 3) {
          push(fs, FactorKind::Z2, 1);
          push(fs, FactorKind::Z6, 1);
        } else {
          push(fs, FactorKind::Z2, 1);
          push(fs, FactorKind::Z, 1);
        }
        break;
      case PresentationTarget::AutsMod2:
        if (n == 1) {
          push(fs, FactorKind::Z3, 1);
          push(fs, FactorKind::Z, 1);
          out.iota_quotient = true;
        } else if (n == 2) {
          push(fs, FactorKind::Z4, 1);
          push(fs, FactorKind::Z, 1);
        } else {
          push(fs, FactorKind::Z, 2);
        }
        break;
    }
    return out;
  }

  const InvariantTable t = gamma0_invariants(n);
  const FrickeTable ft = fricke_invariants(n);
  const int64_t half_nu2 = t.nu2 / 2;
  const int64_t half_nu3 = t.nu3 / 2;
  const int64_t half_inf = t.nu_inf / 2;
  const int64_t two_genus_plus = 2 * ft.genus_plus;
  switch (which) {
    case PresentationTarget::Pi1OrbQ0:
      // punctured orbifold: cone points of orders 2 and 3, xi punctures at
      // the removed (-2)-points, half_inf cusp punctures (one loop is a
      // product of all the others), free rank 2 * genus_plus from handles
      push(fs, FactorKind::Z2, half_nu2);
      push(fs, FactorKind::Z3, half_nu3);
      push(fs, FactorKind::ZRing, ft.xi);
      push(fs, FactorKind::ZCheck, half_inf - 1);
      push(fs, FactorKind::Z, two_genus_plus);
      break;
    case PresentationTarget::FrickeGroup:
      // same surface with the (-2)-points filled back in as order-2 cone
      // points; only the cusps stay punctures
      push(fs, FactorKind::Z2, half_nu2 + ft.xi);
      push(fs, FactorKind::Z3, half_nu3);
      push(fs, FactorKind::Z, two_genus_plus + half_inf - 1);
      break;
    case PresentationTarget::AutsMod2:
      // decorations erased: every infinite cyclic factor is a plain Z
      push(fs, FactorKind::Z2, half_nu2);
      push(fs, FactorKind::Z3, half_nu3);
      push(fs, FactorKind::Z, ft.xi + half_inf - 1 + two_genus_plus);
      break;
  }
  return out;
}

}  // namespace k3
