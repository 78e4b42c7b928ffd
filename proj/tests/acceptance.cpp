// Acceptance checks for the whole artifact: ten end-to-end criteria, each
// printed as a single [PASS]/[FAIL] line with its wall time. The process
// exits nonzero if any criterion fails. Where a criterion demands agreement
// between a closed formula and an independent computation, both sides are
// evaluated here rather than trusting the library's internal assertions.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3/arith.hpp"
#include "k3/classify.hpp"
#include "k3/counting.hpp"
#include "k3/cubic.hpp"
#include "k3/fricke.hpp"
#include "k3/fricke_group.hpp"
#include "k3/gamma0.hpp"
#include "k3/mukai.hpp"

namespace {

using namespace k3;

// Returns std::nullopt on success, a failure description otherwise.
using Criterion = std::function<std::optional<std::string>()>;

#define EXPECT(cond, detail)                    \
  do {                                          \
    if (!(cond)) {                              \
      std::ostringstream os_;                   \
      os_ << detail;                            \
      return os_.str();                         \
    }                                           \
  } while (0)

// ---------------------------------------------------------------------------
// Enumeration of all canonical elements of Gamma0+(n) with entries bounded
// by `bound` in absolute value, both cosets, identity included.

template <typename F>
void for_each_element(int64_t n, int64_t bound, F&& f) {
  // Unit coset, det 1: solve p from ps - qr = 1.
  for (int64_t q = -bound; q <= bound; ++q)
    for (int64_t r = -bound; r <= bound; ++r) {
      if (r % n != 0) continue;
      for (int64_t s = -bound; s <= bound; ++s) {
        if (s == 0) {
          if (q * r != -1) continue;
          for (int64_t p = -bound; p <= bound; ++p)
            f(FrickeElement::make(n, p, q, r, 0, DetTag::Unit));
          continue;
        }
        const int64_t num = 1 + q * r;
        if (num % s != 0) continue;
        const int64_t p = num / s;
        if (p < -bound || p > bound) continue;
        f(FrickeElement::make(n, p, q, r, s, DetTag::Unit));
      }
    }
  if (n == 1) return;  // the Fricke coset coincides with the group
  // Fricke coset, det n, p = na, r = nb, s = nc: solve q from n*ac - qb = 1.
  const int64_t m = bound / n;
  for (int64_t a = -m; a <= m; ++a)
    for (int64_t b = -m; b <= m; ++b) {
      if (b == 0) continue;  // n*ac = 1 impossible for n >= 2
      for (int64_t c = -m; c <= m; ++c) {
        const int64_t num = n * a * c - 1;
        if (num % b != 0) continue;
        const int64_t q = num / b;
        if (q < -bound || q > bound) continue;
        const int64_t p = n * a, r = n * b, s = n * c;
        // Integer models with common content represent unit-coset elements
        // already enumerated above; make() would reject them.
        if (gcd64(gcd64(abs64(p), abs64(q)), gcd64(abs64(r), abs64(s))) != 1) continue;
        f(FrickeElement::make(n, p, q, r, s, DetTag::Fricke));
      }
    }
}

// ---------------------------------------------------------------------------
// 1. Hand-tabulated invariant tables for the smallest levels.

std::optional<std::string> c1_small_tables() {
  const InvariantTable t1 = gamma0_invariants(1);
  EXPECT(t1.mu == 1 && t1.nu2 == 1 && t1.nu3 == 1 && t1.nu_inf == 1 && t1.genus == 0,
         "level 1 table wrong");

  struct Row {
    int64_t n, xi, nu2p, nu3p, nu4p, nu6p, nu_infp, genusp;
    std::vector<int64_t> orders;
  };
  const Row rows[] = {
      {1, 1, 1, 1, 0, 0, 1, 0, {2}},
      {2, 1, 1, 0, 1, 0, 1, 0, {2}},
      {3, 2, 1, 0, 0, 1, 1, 0, {2, 6}},
      {4, 1, 1, 0, 0, 0, 2, 0, {2}},
  };
  for (const Row& row : rows) {
    const FrickeTable f = fricke_invariants(row.n);
    EXPECT(f.xi == row.xi, "xi(" << row.n << ") = " << f.xi);
    EXPECT(f.nu2_plus == row.nu2p && f.nu3_plus == row.nu3p && f.nu4_plus == row.nu4p &&
               f.nu6_plus == row.nu6p && f.nu_inf_plus == row.nu_infp &&
               f.genus_plus == row.genusp,
           "quotient invariants wrong at n = " << row.n);
    EXPECT(f.minus_two.count == static_cast<int64_t>(row.orders.size()) &&
               f.minus_two.orders == row.orders,
           "census wrong at n = " << row.n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 2. Headline conjugacy-class counts at the advertised degrees.

std::optional<std::string> c2_headline_counts() {
  const std::pair<int64_t, int64_t> involutions[] = {
      {2, 1}, {4, 1}, {6, 0}, {8, 0}, {10, 1}, {130, 2}};
  for (const auto& [degree, expected] : involutions)
    EXPECT(count_involution_classes(degree) == expected,
           "involution count at degree " << degree);

  const std::pair<int64_t, int64_t> z3[] = {{14, 1}, {42, 1}, {18, 0}, {10, 0}};
  for (const auto& [degree, expected] : z3)
    EXPECT(count_subgroups_mod2(degree).z3_mod2_classes == expected,
           "Z3 count at degree " << degree);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 3. Arithmetic counting formulas against halved elliptic point counts.

std::optional<std::string> c3_count_agreement() {
  for (int64_t n = 5; n <= 1000; ++n) {
    const InvariantTable t = gamma0_invariants(n);
    EXPECT(count_involution_classes(2 * n) == t.nu2 / 2 && t.nu2 % 2 == 0,
           "involution count != nu2/2 at n = " << n);
    EXPECT(count_subgroups_mod2(2 * n).z3_mod2_classes == t.nu3 / 2 && t.nu3 % 2 == 0,
           "Z3 count != nu3/2 at n = " << n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 4. Product formulas against brute-force congruence solution counts.

std::optional<std::string> c4_congruence_oracle() {
  for (int64_t n = 1; n <= 2000; ++n) {
    const InvariantTable t = gamma0_invariants(n);
    EXPECT(t.nu2 == elliptic_congruence_oracle(n, 2), "nu2 oracle mismatch at n = " << n);
    EXPECT(t.nu3 == elliptic_congruence_oracle(n, 3), "nu3 oracle mismatch at n = " << n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 5. Class numbers coupled to modular invariants: genus formula parity and
// the ramified double cover's Riemann-Hurwitz identity.

std::optional<std::string> c5_class_number_coupling() {
  for (int64_t n = 5; n <= 2000; ++n) {
    const InvariantTable t = gamma0_invariants(n);
    const int64_t x = xi(n);
    EXPECT(x % 2 == 0, "xi odd at n = " << n);
    const int64_t twice_genus_plus = t.genus + 1 - x / 2;
    EXPECT(twice_genus_plus >= 0 && twice_genus_plus % 2 == 0,
           "g + 1 - xi/2 = " << twice_genus_plus << " at n = " << n);
    const FrickeTable f = fricke_invariants(n);
    EXPECT(2 * f.genus_plus == twice_genus_plus, "genus formula mismatch at n = " << n);
    EXPECT(2 * t.genus - 2 == 2 * (2 * f.genus_plus - 2) + x,
           "Riemann-Hurwitz fails at n = " << n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 6. Lattice identities on pseudo-random words (fixed seed).

using Mat3 = std::array<std::array<int64_t, 3>, 3>;

bool mat_is_zero(const Mat3& m) {
  for (const auto& row : m)
    for (int64_t x : row)
      if (x != 0) return false;
  return true;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < 3; ++k) acc += static_cast<__int128>(a[i][k]) * b[k][j];
      c[i][j] = narrow128(acc, "acceptance matrix product");
    }
  return c;
}

std::optional<std::string> c6_random_words() {
  std::mt19937 rng(6180339);
  std::uniform_int_distribution<int64_t> pick_n(1, 50);
  std::uniform_int_distribution<int> pick_len(1, 12), pick_gen(0, 4);
  // Eigenvalue surds carry radicands of size t^4 ~ (2 cap)^4; the cap keeps
  // them inside the library's trial-division envelope with room to spare.
  constexpr int64_t kEntryCap = 300;

  int words = 0;
  while (words < 500) {
    const int64_t n = pick_n(rng);
    const FrickeElement T = FrickeElement::make(n, 1, 1, 0, 1, DetTag::Unit);
    const FrickeElement L = FrickeElement::make(n, 1, 0, n, 1, DetTag::Unit);
    const FrickeElement W = FrickeElement::fricke_involution(n);
    const FrickeElement gens[] = {T, T.inverse(), L, L.inverse(), W};

    FrickeElement g = FrickeElement::identity(n);
    const int len = pick_len(rng);
    for (int i = 0; i < len; ++i) {
      const FrickeElement h = g * gens[pick_gen(rng)];
      if (abs64(h.p) > kEntryCap || abs64(h.q) > kEntryCap || abs64(h.r) > kEntryCap ||
          abs64(h.s) > kEntryCap)
        break;
      g = h;
    }
    if (g.is_identity()) continue;
    ++words;

    const LatticeIsometry M = induced_isometry(g);
    EXPECT(M.preserves_pairing(), "Gram identity fails for " << g);
    EXPECT(M.det() == 1, "induced det != 1 for " << g);

    const EigenData ed = eigen_data(M, g);
    const MukaiVector v = ed.eigen_one_vector;
    EXPECT(!v.is_zero() && M(v) == v, "fixed vector not fixed for " << g);

    // Square of the true fixed vector, recomputed from the raw entries:
    // t^2 = trace^2 / det and v^2 must equal 2n (t^2 - 4).
    const Rational t2 = Rational(mul64(g.trace(), g.trace()), g.det());
    EXPECT(Rational(2 * n) * (t2 - Rational(4)) == Rational(ed.eigen_one_square),
           "fixed-vector square identity fails for " << g);

    // Unipotent structure: (M - 1)^2 != 0 and (M - 1)^3 = 0 iff t^2 = 4.
    Mat3 j = M.m;
    for (int i = 0; i < 3; ++i) j[i][i] -= 1;
    const Mat3 j2 = mat_mul(j, j);
    const Mat3 j3 = mat_mul(j2, j);
    const bool rank3_unipotent = !mat_is_zero(j2) && mat_is_zero(j3);
    EXPECT(rank3_unipotent == (t2 == Rational(4)),
           "Jordan structure does not match the trace for " << g);
    EXPECT(ed.jordan_block_3 == rank3_unipotent, "jordan flag wrong for " << g);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 7. Exclusive classification over an exhaustive box.

std::optional<std::string> c7_polychotomy_box() {
  std::optional<std::string> failure;
  for (int64_t n = 1; n <= 12; ++n) {
    bool saw_order4 = false, saw_order6 = false;
    int64_t classified = 0;
    for_each_element(n, 40, [&](const FrickeElement& g) {
      if (failure || g.is_identity()) return;
      auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << why << " for " << g << " at n = " << n;
        failure = os.str();
      };

      const TraceClass tc = trace_class(g);
      if (tc.kind == TraceClass::Kind::Elliptic) {
        if (tc.order == 4) saw_order4 = true;
        if (tc.order == 6) saw_order6 = true;
        if ((tc.order == 4 && n != 2) || (tc.order == 6 && n != 3))
          return fail("forbidden elliptic order");
      }

      const PolychotomyResult res = classify_element(g);
      ++classified;
      if (const auto* fo = std::get_if<FiniteOrder>(&res)) {
        if (fo->order < 2 || fo->order > 6 || fo->order == 5)
          return fail("bad finite order");
        FrickeElement power = g;
        for (int i = 1; i < fo->order; ++i) power = power * g;
        if (!power.is_identity()) return fail("finite-order power not identity");
      } else if (const auto* mt = std::get_if<MinusTwoReducible>(&res)) {
        if (square(mt->delta) != -2) return fail("delta square != -2");
        if (involution_from_vector(mt->delta) != g)
          return fail("delta does not induce the element");
      } else if (const auto* zr = std::get_if<ZeroReducible>(&res)) {
        if (square(zr->w) != 0 || zr->w.is_zero() || zr->w.content() != 1)
          return fail("w not primitive isotropic");
        if (induced_isometry(g)(zr->w) != zr->w) return fail("w not fixed");
      } else if (const auto* pa = std::get_if<PseudoAnosov>(&res)) {
        if ((pa->spectral_radius - Surd(Rational(1))).sign() <= 0)
          return fail("spectral radius not > 1");
      } else {
        const auto& em = std::get<EllipticAtMinusTwoPoint>(res);
        if (square(em.delta) != -2) return fail("stabilizing delta square != -2");
        if (em.order <= 2) return fail("diagnostic variant with order <= 2");
      }
    });
    if (failure) return failure;
    EXPECT(classified > 0, "empty box at n = " << n);
    EXPECT(saw_order4 == (n == 2), "order-4 presence wrong at n = " << n);
    EXPECT(saw_order6 == (n == 3), "order-6 presence wrong at n = " << n);

    // Pinned images of the two standard autoequivalences.
    const PolychotomyResult twist = classify_element(FrickeElement::fricke_involution(n));
    const auto* mt = std::get_if<MinusTwoReducible>(&twist);
    EXPECT(mt != nullptr && mt->delta == MukaiVector(n, 1, 0, 1),
           "structure-sheaf twist not (-2)-reducible along (1,0,1) at n = " << n);
    const PolychotomyResult tensor =
        classify_element(FrickeElement::make(n, 1, 1, 0, 1, DetTag::Unit));
    const auto* zr = std::get_if<ZeroReducible>(&tensor);
    EXPECT(zr != nullptr && zr->w == MukaiVector(n, 0, 0, 1),
           "line-bundle tensor not 0-reducible along (0,0,1) at n = " << n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 8. The lambda-test at the elliptic points of small level.

std::optional<std::string> c8_lambda_test() {
  // Order-4 point at n = 2: not a (-2)-point.
  const FrickeElement g4 = FrickeElement::make(2, 2, -1, 2, 0, DetTag::Fricke);
  EXPECT(trace_class(g4).order == 4 && !is_minus_two_point(g4).has_value(),
         "order-4 point at n = 2 wrongly certified");
  // Order-6 point at n = 3: certified with delta = (2, 1, 2).
  const FrickeElement g6 = FrickeElement::make(3, 3, -1, 3, 0, DetTag::Fricke);
  const auto cert6 = is_minus_two_point(g6);
  EXPECT(trace_class(g6).order == 6 && cert6.has_value() &&
             cert6->delta == MukaiVector(3, 2, 1, 2),
         "order-6 point at n = 3 not certified by (2,1,2)");

  std::optional<std::string> failure;
  for (int64_t n = 1; n <= 30; ++n) {
    // The Fricke involution fixes a (-2)-point with certificate (1, 0, 1).
    const auto cert_w = is_minus_two_point(FrickeElement::fricke_involution(n));
    EXPECT(cert_w.has_value() && cert_w->delta == MukaiVector(n, 1, 0, 1) &&
               cert_w->lambda == Rational(1),
           "Fricke involution certificate wrong at n = " << n);

    // Every certificate over a box of elliptic elements is sound: delta is a
    // (-2)-vector whose twist involution fixes the same point; every trace-0
    // element of the Fricke coset is certified by its own reflection vector.
    for_each_element(n, 30, [&](const FrickeElement& g) {
      if (failure || g.is_identity()) return;
      if (trace_class(g).kind != TraceClass::Kind::Elliptic) return;
      auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << why << " for " << g << " at n = " << n;
        failure = os.str();
      };
      const auto cert = is_minus_two_point(g);
      const bool twist_involution = g.trace() == 0 && (n == 1 || g.tag == DetTag::Fricke);
      if (twist_involution) {
        if (!cert.has_value()) return fail("uncertified twist involution");
        if (cert->delta != vector_from_involution(g))
          return fail("certificate disagrees with the reflection vector");
      }
      if (!cert.has_value()) return;
      if (square(cert->delta) != -2) return fail("certified delta square != -2");
      const FrickeElement h = involution_from_vector(cert->delta);
      if (std::get<HPoint>(fixed_point(h)) != std::get<HPoint>(fixed_point(g)))
        return fail("certificate fixes another point");
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 9. Cubic fourfold criterion against the discriminant conditions.

std::optional<std::string> c9_cubic_equivalence() {
  for (int64_t n = 7; n <= 1000; ++n) {
    const CubicVerdict v = cubic_verdict(2 * n);
    EXPECT((v.nu3 > 0) == (v.hassett_nonempty && v.k3_divisibility),
           "equivalence fails at degree " << 2 * n);
    EXPECT(v.has_associated_cubic == (v.nu3 > 0), "verdict mismatch at degree " << 2 * n);
  }
  EXPECT(cubic_verdict(14).has_associated_cubic, "degree 14 must have a cubic");
  EXPECT(cubic_verdict(26).has_associated_cubic, "degree 26 must have a cubic");
  EXPECT(!cubic_verdict(12).has_associated_cubic, "degree 12 must not have a cubic");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 10. Scope note: recorded as a criterion so the boundary is explicit.

std::optional<std::string> c10_scope_note() {
  // The realization statements behind these counts concern contractibility
  // of infinite-dimensional stability manifolds and admit no finite check;
  // criteria 3, 7 and 8 are their computable shadows, and that substitution
  // is deliberate. Nothing to compute.
  return std::nullopt;
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"small-level invariant tables exact", c1_small_tables},
      {"headline subgroup counts", c2_headline_counts},
      {"counting formulas equal halved elliptic counts (n <= 1000)", c3_count_agreement},
      {"product formulas equal congruence oracle (n <= 2000)", c4_congruence_oracle},
      {"class-number / genus / Riemann-Hurwitz coupling (n <= 2000)", c5_class_number_coupling},
      {"lattice identities on 500 pseudo-random words (n <= 50)", c6_random_words},
      {"exclusive classification on exhaustive box (n <= 12, entries <= 40)", c7_polychotomy_box},
      {"(-2)-point lambda-test at small levels (n <= 30)", c8_lambda_test},
      {"cubic fourfold criterion equivalence (n <= 1000)", c9_cubic_equivalence},
      {"realization statements reduced to criteria 3/7/8 by design", c10_scope_note},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [label, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (outcome) {
      ++failures;
      std::cout << "[FAIL] " << index << ". " << label << " (" << ms << " ms): " << *outcome
                << "\n";
    } else {
      std::cout << "[PASS] " << index << ". " << label << " (" << ms << " ms)\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
