#include "k3/fricke_group.hpp"

#include "k3/arith.hpp"

namespace k3 {

namespace {

struct RawMatrix {
  int64_t p, q, r, s;
};

// Scalar matrices act trivially on H, so entries are reduced by their gcd and
// the leading sign is fixed projectively.
RawMatrix reduce_and_orient(int64_t p, int64_t q, int64_t r, int64_t s) {
  int64_t g = gcd64(gcd64(abs64(p), abs64(q)), gcd64(abs64(r), abs64(s)));
  require(g != 0, "zero matrix is not a group element");
  p /= g;
  q /= g;
  r /= g;
  s /= g;
  int64_t lead = p != 0 ? p : q != 0 ? q : r != 0 ? r : s;
  if (lead < 0) {
    p = neg64(p);
    q = neg64(q);
    r = neg64(r);
    s = neg64(s);
  }
  return {p, q, r, s};
}

int64_t det_of(const RawMatrix& m) {
  return sub64(mul64(m.p, m.s), mul64(m.q, m.r));
}

}  // namespace

FrickeElement FrickeElement::make(int64_t n, int64_t p, int64_t q, int64_t r, int64_t s,
                                  DetTag tag) {
  require(n >= 1, "FrickeElement: n must be a positive integer");
  RawMatrix m = reduce_and_orient(p, q, r, s);
  int64_t det = det_of(m);
  if (n == 1) tag = DetTag::Unit;  // at n = 1 the coset is the group itself
  if (tag == DetTag::Unit) {
    require(det == 1, "UNIT element must have determinant 1");
    require(m.r % n == 0, "UNIT element needs n | r");
  } else {
    require(det == n, "FRICKE element must have determinant n");
    require(m.p % n == 0 && m.r % n == 0 && m.s % n == 0,
            "FRICKE element needs n | p, n | r, n | s");
  }
  return FrickeElement{n, m.p, m.q, m.r, m.s, tag};
}

FrickeElement FrickeElement::identity(int64_t n) {
  return make(n, 1, 0, 0, 1, DetTag::Unit);
}

FrickeElement FrickeElement::fricke_involution(int64_t n) {
  return make(n, 0, -1, n, 0, n == 1 ? DetTag::Unit : DetTag::Fricke);
}

int64_t FrickeElement::det() const {
  return sub64(mul64(p, s), mul64(q, r));
}

bool FrickeElement::is_identity() const {
  return p == 1 && q == 0 && r == 0 && s == 1;
}

FrickeElement FrickeElement::inverse() const {
  // The adjugate has the same determinant and satisfies the same divisibility
  // constraints, so it is the inverse in PSL up to the sqrt(n) scalar.
  FrickeElement g{n, s, neg64(q), neg64(r), p, tag};
  RawMatrix m = reduce_and_orient(g.p, g.q, g.r, g.s);
  return FrickeElement{n, m.p, m.q, m.r, m.s, tag};
}

FrickeElement operator*(const FrickeElement& g, const FrickeElement& h) {
  require(g.n == h.n, "composing elements of different levels");
  const int64_t n = g.n;
  int64_t p = add64(mul64(g.p, h.p), mul64(g.q, h.r));
  int64_t q = add64(mul64(g.p, h.q), mul64(g.q, h.s));
  int64_t r = add64(mul64(g.r, h.p), mul64(g.s, h.r));
  int64_t s = add64(mul64(g.r, h.q), mul64(g.s, h.s));
  RawMatrix m = reduce_and_orient(p, q, r, s);
  int64_t det = det_of(m);
  DetTag tag;
  if (det == 1) {
    tag = DetTag::Unit;
    ensure(m.r % n == 0, "composition left Gamma0(n)");
  } else if (det == n && n > 1) {
    tag = DetTag::Fricke;
    ensure(m.p % n == 0 && m.r % n == 0 && m.s % n == 0,
           "composition left the Fricke coset");
  } else {
    throw InternalError("composition determinant not in {1, n}");
  }
  return FrickeElement{n, m.p, m.q, m.r, m.s, tag};
}

std::ostream& operator<<(std::ostream& os, const FrickeElement& g) {
  os << "(" << g.p << ", " << g.q << "; " << g.r << ", " << g.s << ")";
  if (g.tag == DetTag::Fricke) os << "/sqrt(" << g.n << ")";
  return os;
}

HPoint HPoint::interior(const Rational& re, const Rational& im_coeff, int64_t radicand) {
  require(radicand >= 1, "interior point needs a positive radicand");
  auto [k, m0] = squarefree_decompose(radicand);
  Rational coeff = im_coeff * Rational(k);
  require(coeff.sign() > 0, "interior point must have positive imaginary part");
  return HPoint{Kind::Interior, re, coeff, m0};
}

std::ostream& operator<<(std::ostream& os, const HPoint& z) {
  switch (z.kind) {
    case HPoint::Kind::CuspInfinity:
      return os << "oo";
    case HPoint::Kind::CuspFinite:
      return os << z.re;
    case HPoint::Kind::Interior:
      os << z.re << " + " << z.im_coeff;
      if (z.im_radicand != 1) os << "*sqrt(" << z.im_radicand << ")";
      return os << "*i";
  }
  return os;
}

TraceClass trace_class(const FrickeElement& g) {
  Rational t2(mul64(g.trace(), g.trace()), g.det());
  TraceClass tc;
  tc.trace_squared = t2;
  if (t2 > Rational(4)) {
    tc.kind = TraceClass::Kind::Hyperbolic;
  } else if (t2 == Rational(4)) {
    tc.kind = TraceClass::Kind::Parabolic;
  } else {
    tc.kind = TraceClass::Kind::Elliptic;
    // t = 2 cos(pi/order) forces t^2 in {0, 1, 2, 3}.
    int64_t t2i = t2.as_integer("elliptic trace square");
    switch (t2i) {
      case 0: tc.order = 2; break;
      case 1: tc.order = 3; break;
      case 2: tc.order = 4; break;
      case 3: tc.order = 6; break;
      default: throw InternalError("elliptic trace square outside {0,1,2,3}");
    }
  }
  return tc;
}

HPoint apply(const FrickeElement& g, const HPoint& z) {
  const Rational p(g.p), q(g.q), r(g.r), s(g.s);
  switch (z.kind) {
    case HPoint::Kind::CuspInfinity:
      return g.r == 0 ? HPoint::infinity() : HPoint::cusp(p / r);
    case HPoint::Kind::CuspFinite: {
      Rational den = r * z.re + s;
      if (den.is_zero()) return HPoint::infinity();
      return HPoint::cusp((p * z.re + q) / den);
    }
    case HPoint::Kind::Interior: {
      // z = u + v*sqrt(m)*i. The sqrt(n) scalar of a Fricke element cancels,
      // so the integer model acts directly; det > 0 keeps Im > 0.
      const Rational u = z.re, v = z.im_coeff;
      const Rational m(z.im_radicand);
      Rational den = (r * u + s) * (r * u + s) + r * r * v * v * m;
      ensure(!den.is_zero(), "Moebius action with vanishing denominator at interior point");
      Rational re = ((p * u + q) * (r * u + s) + p * r * v * v * m) / den;
      Rational im = v * Rational(g.det()) / den;
      return HPoint::interior(re, im, z.im_radicand);
    }
  }
  throw InternalError("unreachable HPoint kind");
}

Surd apply_boundary(const FrickeElement& g, const Surd& x) {
  const Surd p{Rational(g.p)}, q{Rational(g.q)}, r{Rational(g.r)}, s{Rational(g.s)};
  Surd den = r * x + s;
  require(den.sign() != 0, "Moebius action sends boundary point to infinity");
  return (p * x + q) / den;
}

FixedPointSet fixed_point(const FrickeElement& g) {
  require(!g.is_identity(), "identity has no isolated fixed point");
  const int64_t det = g.det();
  const int64_t tr = g.trace();
  const int64_t disc = sub64(mul64(tr, tr), mul64(4, det));
  if (disc < 0) {
    ensure(g.r != 0, "elliptic element with r = 0");
    auto [k, m0] = squarefree_decompose(neg64(disc));
    Rational re(sub64(g.p, g.s), mul64(2, g.r));
    Rational im(k, mul64(2, abs64(g.r)));
    return HPoint::interior(re, im, m0);
  }
  if (disc == 0) {
    if (g.r == 0) return HPoint::infinity();
    return HPoint::cusp(Rational(sub64(g.p, g.s), mul64(2, g.r)));
  }
  ensure(g.r != 0, "hyperbolic element with r = 0");
  auto [k, m0] = squarefree_decompose(disc);
  Rational base(sub64(g.p, g.s), mul64(2, g.r));
  Rational coeff(k, mul64(2, g.r));
  return BoundaryPair{Surd(base, coeff, m0), Surd(base, -coeff, m0)};
}

FrickeElement involution_from_vector(const MukaiVector& delta) {
  require(square(delta) == -2, "involution_from_vector: delta^2 must be -2");
  const int64_t n = delta.n;
  return FrickeElement::make(n, mul64(n, delta.d), neg64(delta.s), mul64(n, delta.r),
                             neg64(mul64(n, delta.d)),
                             n == 1 ? DetTag::Unit : DetTag::Fricke);
}

MukaiVector vector_from_involution(const FrickeElement& g) {
  require(g.trace() == 0, "vector_from_involution: element must have trace 0");
  require(g.tag == DetTag::Fricke || g.n == 1,
          "vector_from_involution: element must lie in the Fricke coset");
  MukaiVector delta(g.n, exact_div(g.r, g.n, "vector_from_involution r/n"),
                    exact_div(g.p, g.n, "vector_from_involution p/n"), neg64(g.q));
  ensure(square(delta) == -2, "vector_from_involution: delta^2 != -2");
  return delta.primitive();
}

std::optional<TwistCertificate> is_minus_two_point(const FrickeElement& g) {
  TraceClass tc = trace_class(g);
  require(tc.kind == TraceClass::Kind::Elliptic, "is_minus_two_point: element must be elliptic");
  ensure(g.r != 0, "elliptic element with r = 0");

  // Fixed-point form of g, primitive and positive definite.
  int64_t a = g.r, b = sub64(g.s, g.p), c = neg64(g.q);
  int64_t content = gcd64(gcd64(abs64(a), abs64(b)), abs64(c));
  a /= content;
  b /= content;
  c /= content;
  if (a < 0) {
    a = neg64(a);
    b = neg64(b);
    c = neg64(c);
  }
  int64_t disc = sub64(mul64(b, b), mul64(4, mul64(a, c)));
  ensure(disc < 0, "fixed-point form of an elliptic element must be definite");
  int64_t abs_disc = neg64(disc);

  // lambda = sqrt(4n/|disc|) is rational iff 4n*|disc| is a perfect square.
  int64_t target = mul64(mul64(4, g.n), abs_disc);
  int64_t root = isqrt64(target);
  if (mul64(root, root) != target) return std::nullopt;
  Rational lambda(root, abs_disc);

  Rational dr = lambda * Rational(a) / Rational(g.n);
  Rational dd = -(lambda * Rational(b)) / Rational(mul64(2, g.n));
  Rational ds = lambda * Rational(c);
  if (!dr.is_integer() || !dd.is_integer() || !ds.is_integer()) return std::nullopt;

  MukaiVector delta(g.n, dr.as_integer(), dd.as_integer(), ds.as_integer());
  ensure(square(delta) == -2, "minus-two certificate with delta^2 != -2");
  return TwistCertificate{lambda, delta.primitive()};
}

}  // namespace k3
