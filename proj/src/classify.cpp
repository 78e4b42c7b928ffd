#include "k3/classify.hpp"

namespace k3 {

namespace {

// Lexicographic order on (p, q, r, s); used only to pick a deterministic
// direction for a stabilizer generator among {g, g^-1}.
bool lex_less(const FrickeElement& a, const FrickeElement& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.r != b.r) return a.r < b.r;
  return a.s < b.s;
}

FrickeElement lex_larger_of_pair(const FrickeElement& g) {
  FrickeElement inv = g.inverse();
  return lex_less(g, inv) ? inv : g;
}

}  // namespace

PolychotomyResult classify_element(const FrickeElement& g) {
  require(!g.is_identity(), "classify_element: identity excluded");
  TraceClass tc = trace_class(g);

  switch (tc.kind) {
    case TraceClass::Kind::Hyperbolic: {
      const int64_t t2 = tc.trace_squared.as_integer("hyperbolic trace square");
      Surd rho = Surd(Rational(sub64(t2, 2), 2)) +
                 Surd::sqrt_of(Rational(mul64(t2, sub64(t2, 4)), 4));
      ensure((rho - Surd(Rational(1))).sign() > 0, "spectral radius must exceed 1");
      return PseudoAnosov{rho};
    }

    case TraceClass::Kind::Parabolic: {
      MukaiVector v(g.n, mul64(2, g.r), sub64(g.p, g.s), neg64(mul64(2, mul64(g.n, g.q))));
      ensure(!v.is_zero(), "parabolic element with vanishing fixed vector");
      MukaiVector w = v.primitive();
      ensure(square(w) == 0, "parabolic fixed vector must be isotropic");
      ensure(induced_isometry(g)(w) == w, "parabolic fixed vector not preserved");
      return ZeroReducible{w};
    }

    case TraceClass::Kind::Elliptic: {
      auto cert = is_minus_two_point(g);
      if (!cert) {
        auto fp = fixed_point(g);
        return FiniteOrder{tc.order, std::get<HPoint>(fp)};
      }
      if (tc.order == 2) {
        // Only twist-induced involutions fix (-2)-points: for n >= 2 the
        // Gamma0(n)-stabilizer of such a point has odd order.
        ensure(g.tag == DetTag::Fricke || g.n == 1,
               "involution of Gamma0(n) fixing a (-2)-point");
        return MinusTwoReducible{cert->delta};
      }
      return EllipticAtMinusTwoPoint{tc.order, cert->delta};
    }
  }
  throw InternalError("unreachable trace class");
}

CuspStabilizer cusp_stabilizer(int64_t n, const MukaiVector& w) {
  require(n >= 1, "cusp_stabilizer: n must be a positive integer");
  require(w.n == n, "cusp_stabilizer: vector belongs to a different lattice");
  require(!w.is_zero(), "cusp_stabilizer: w must be nonzero");
  require(w.content() == 1, "cusp_stabilizer: w must be primitive");
  require(square(w) == 0, "cusp_stabilizer: w must be isotropic");

  // The cusp determined by w = (r, d, s) is d/r (isotropy makes this equal
  // to s/(nd) whenever both are defined), written a/c in lowest terms.
  int64_t a, c;
  if (w.r == 0) {
    a = 1;
    c = 0;
  } else {
    int64_t g0 = gcd64(abs64(w.d), abs64(w.r));
    a = w.d / g0;
    c = w.r / g0;
    if (c < 0) {
      a = neg64(a);
      c = neg64(c);
    }
  }
  HPoint cusp = c == 0 ? HPoint::infinity() : HPoint::cusp(Rational(a, c));

  // sigma = (a, b0; c, d0) in SL2(Z) sends oo to a/c; conjugating the
  // translation T^t gives (1 - a c t, a^2 t; -c^2 t, 1 + a c t), which lies
  // in Gamma0(n) exactly when n | c^2 t. Take the least positive t.
  int64_t cc_mod = c == 0 ? 0 : narrow128((static_cast<__int128>(c) * c) % n, "c^2 mod n");
  int64_t t0 = n / (cc_mod == 0 ? n : gcd64(n, cc_mod));
  int64_t act = mul64(mul64(a, c), t0);
  FrickeElement unit_gen =
      FrickeElement::make(n, sub64(1, act), mul64(mul64(a, a), t0),
                          neg64(mul64(mul64(c, c), t0)), add64(1, act), DetTag::Unit);
  FrickeElement gen = lex_larger_of_pair(unit_gen);

  // Only n = 4 admits parabolic elements in the Fricke coset ((p+s)^2 = 4n
  // with n | p+s forces n = 4), at cusps a/c with c = 2 mod 4; there the
  // stabilizer in Gamma0+(4) is generated by a half-translation h, h^2 = u.
  if (n == 4 && mod64(c, 4) == 2) {
    FrickeElement half =
        FrickeElement::make(4, sub64(2, mul64(a, c)), mul64(a, a), neg64(mul64(c, c)),
                            add64(2, mul64(a, c)), DetTag::Fricke);
    ensure(half * half == unit_gen, "half-translation must square to the unit generator");
    gen = lex_larger_of_pair(half);
  }

  // The generator must be parabolic, fix the cusp, and have fixed vector w.
  ensure(trace_class(gen).kind == TraceClass::Kind::Parabolic,
         "cusp stabilizer generator must be parabolic");
  ensure(apply(gen, cusp) == cusp, "cusp stabilizer generator must fix the cusp");
  MukaiVector v(n, mul64(2, gen.r), sub64(gen.p, gen.s), neg64(mul64(2, mul64(n, gen.q))));
  ensure(v.primitive() == w.primitive(), "generator fixed vector must match w");

  const char* kernel = n == 1 ? "<I(D^b(X)), iota>" : "I(D^b(X))";
  return CuspStabilizer{gen, cusp, kernel};
}

}  // namespace k3
