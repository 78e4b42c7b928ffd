#include "k3/fricke.hpp"

#include "k3/arith.hpp"
#include "k3/checked.hpp"

namespace k3 {

int64_t xi(int64_t n) {
  require(n >= 1, "xi: level must be a positive integer");
  int64_t value = class_number(mul64(-4, n));
  if (mod64(n, 4) == 3) value = add64(value, class_number(neg64(n)));
  return value;
}

FrickeTable fricke_invariants(int64_t n) {
  require(n >= 1, "fricke_invariants: level must be a positive integer");
  FrickeTable t;
  t.n = n;
  t.xi = xi(n);

  switch (n) {
    case 1:
      t.nu2_plus = t.nu3_plus = t.nu_inf_plus = 1;
      t.minus_two = {1, {2}};
      return t;
    case 2:
      t.nu2_plus = t.nu4_plus = t.nu_inf_plus = 1;
      t.minus_two = {1, {2}};
      return t;
    case 3:
      t.nu2_plus = t.nu6_plus = t.nu_inf_plus = 1;
      t.minus_two = {2, {2, 6}};
      return t;
    case 4:
      t.nu2_plus = 1;
      t.nu_inf_plus = 2;
      t.minus_two = {1, {2}};
      return t;
    default:
      break;
  }

  InvariantTable base = gamma0_invariants(n);
  ensure(base.nu2 % 2 == 0, "fricke_invariants: nu2 odd, cannot halve");
  ensure(base.nu3 % 2 == 0, "fricke_invariants: nu3 odd, cannot halve");
  ensure(base.nu_inf % 2 == 0, "fricke_invariants: nu_inf odd, cannot halve");
  ensure(t.xi % 2 == 0, "fricke_invariants: xi odd, cannot halve");
  t.nu2_plus = add64(base.nu2 / 2, t.xi);
  t.nu3_plus = base.nu3 / 2;
  t.nu_inf_plus = base.nu_inf / 2;
  int64_t twice_genus = sub64(add64(base.genus, 1), t.xi / 2);
  ensure(twice_genus >= 0 && twice_genus % 2 == 0,
         "fricke_invariants: g + 1 - xi/2 must be a nonnegative even integer");
  t.genus_plus = twice_genus / 2;
  t.minus_two.count = t.xi;
  t.minus_two.orders.assign(static_cast<size_t>(t.xi), 2);
  return t;
}

}  // namespace k3
