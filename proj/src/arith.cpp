#include "k3/arith.hpp"

#include "k3/checked.hpp"

namespace k3 {

namespace {
constexpr int64_t kMaxFactorInput = 100'000'000'000'000;  // 10^14
}

Factorization factorize(int64_t n) {
  require(n >= 1, "factorize: input must be a positive integer");
  require(n <= kMaxFactorInput, "factorize: input too large for trial division");
  Factorization f;
  f.n = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

int kronecker(int64_t a, int64_t m) {
  require(m != 0, "kronecker: modulus must be nonzero");
  int result = 1;
  if (m < 0) {
    if (a < 0) result = -result;
    m = neg64(m);
  }
  while (m % 2 == 0) {
    m /= 2;
    int64_t am4 = mod64(a, 4);
    if (am4 == 2 || am4 == 3) return 0;  // 2 ramifies in Q(sqrt(a))
    if (mod64(a, 8) == 5) result = -result;
  }
  // Jacobi symbol (a|m) for odd m >= 1 by quadratic reciprocity.
  a = mod64(a, m);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t m8 = m % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

int64_t class_number(int64_t D) {
  require(D < 0, "class_number: discriminant must be negative");
  require(mod64(D, 4) == 0 || mod64(D, 4) == 1, "class_number: D must be 0 or 1 mod 4");
  const int64_t absD = neg64(D);
  int64_t count = 0;
  for (int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (int64_t b = -a; b <= a; ++b) {
      if (mod64(b, 2) != mod64(D, 2)) continue;
      int64_t num = add64(mul64(b, b), absD);  // b^2 - D
      if (num % (4 * a) != 0) continue;
      int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;  // reduced-form edge rule
      if (gcd64(gcd64(a, abs64(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::pair<int64_t, int64_t> squarefree_decompose(int64_t m) {
  require(m >= 1, "squarefree_decompose: input must be positive");
  Factorization f = factorize(m);
  int64_t k = 1, m0 = 1;
  for (const auto& [p, e] : f.factors) {
    for (int i = 0; i < e / 2; ++i) k = mul64(k, p);
    if (e % 2 == 1) m0 = mul64(m0, p);
  }
  return {k, m0};
}

}  // namespace k3
