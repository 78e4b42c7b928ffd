#include "k3/gamma0.hpp"

#include <vector>

#include "k3/arith.hpp"
#include "k3/checked.hpp"
#include "k3/rational.hpp"

namespace k3 {

namespace {

int64_t euler_phi(int64_t n) {
  int64_t phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
  return phi;
}

std::vector<int64_t> divisors(const Factorization& f) {
  std::vector<int64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    size_t old = divs.size();
    int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk = mul64(pk, p);
      for (size_t j = 0; j < old; ++j) divs.push_back(mul64(divs[j], pk));
    }
  }
  return divs;
}

}  // namespace

InvariantTable gamma0_invariants(int64_t n) {
  require(n >= 1, "gamma0_invariants: level must be a positive integer");
  Factorization f = factorize(n);

  InvariantTable t;
  t.n = n;

  t.mu = n;
  for (const auto& [p, e] : f.factors) t.mu = mul64(t.mu / p, add64(p, 1));

  if (n % 4 == 0) {
    t.nu2 = 0;
  } else {
    t.nu2 = 1;
    for (const auto& [p, e] : f.factors) t.nu2 *= 1 + kronecker(-1, p);
  }

  if (n % 9 == 0) {
    t.nu3 = 0;
  } else {
    t.nu3 = 1;
    for (const auto& [p, e] : f.factors) t.nu3 *= 1 + kronecker(-3, p);
  }

  t.nu_inf = 0;
  for (int64_t d : divisors(f)) t.nu_inf = add64(t.nu_inf, euler_phi(gcd64(d, n / d)));

  Rational g = Rational(1) + Rational(t.mu, 12) - Rational(t.nu2, 4) -
               Rational(t.nu3, 3) - Rational(t.nu_inf, 2);
  ensure(g.is_integer() && g.sign() >= 0, "gamma0_invariants: genus formula not a nonnegative integer");
  t.genus = g.as_integer("genus");

  if (n >= 5)
    ensure(t.nu2 % 2 == 0 && t.nu3 % 2 == 0 && t.nu_inf % 2 == 0,
           "gamma0_invariants: nu2, nu3, nu_inf must be even for n >= 5");
  return t;
}

int64_t elliptic_congruence_oracle(int64_t n, int order) {
  require(n >= 1, "elliptic_congruence_oracle: level must be positive");
  require(order == 2 || order == 3, "elliptic_congruence_oracle: order must be 2 or 3");
  int64_t count = 0;
  for (int64_t x = 0; x < n; ++x) {
    const __int128 sq = static_cast<__int128>(x) * x;
    const __int128 value = order == 2 ? (sq + 1) % n : (sq + x + 1) % n;
    if (value == 0) ++count;
  }
  return count;
}

}  // namespace k3
