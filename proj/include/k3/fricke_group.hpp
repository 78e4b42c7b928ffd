#pragma once

#include <optional>
#include <ostream>
#include <variant>

#include "k3/mukai_vector.hpp"
#include "k3/rational.hpp"
#include "k3/surd.hpp"

namespace k3 {

// Which coset of Gamma0(n) in the Fricke extension an element lies in.
enum class DetTag { Unit, Fricke };

// Integer model for elements of Gamma0+(n) = <Gamma0(n), w_n> in PSL(2,R).
//
//   Unit:   the matrix (p q; r s) itself, det = 1, n | r  (Gamma0(n))
//   Fricke: the true element is (p q; r s)/sqrt(n), det(p q; r s) = n,
//           n | p, n | r, n | s  (coset Gamma0(n) w_n)
//
// Elements are kept in canonical form: entries divided by their gcd (scalars
// act trivially on H) and the first nonzero entry of (p, q, r, s) positive.
// At n = 1 the coset coincides with the group, so the tag normalizes to Unit.
// The Fricke involution w_n : z -> -1/(nz) is the model (0, -1; n, 0).
struct FrickeElement {
  int64_t n{1};
  int64_t p{1}, q{0}, r{0}, s{1};
  DetTag tag{DetTag::Unit};

  // Validates, reduces, and sign-normalizes; rejects inputs violating the
  // determinant or divisibility constraints of the chosen tag.
  static FrickeElement make(int64_t n, int64_t p, int64_t q, int64_t r, int64_t s, DetTag tag);
  static FrickeElement identity(int64_t n);
  static FrickeElement fricke_involution(int64_t n);

  int64_t det() const;
  int64_t trace() const { return add64(p, s); }
  bool is_identity() const;
  FrickeElement inverse() const;

  // Composition: integer product, content divided out, tag recomputed from
  // the determinant (Fricke * Fricke lands back in Gamma0(n)).
  friend FrickeElement operator*(const FrickeElement& g, const FrickeElement& h);

  friend bool operator==(const FrickeElement& g, const FrickeElement& h) {
    return g.n == h.n && g.p == h.p && g.q == h.q && g.r == h.r && g.s == h.s && g.tag == h.tag;
  }
  friend bool operator!=(const FrickeElement& g, const FrickeElement& h) { return !(g == h); }

  friend std::ostream& operator<<(std::ostream& os, const FrickeElement& g);
};

// Point of the (bordified) upper half plane with exact coordinates:
// a cusp in Q u {oo}, or an interior point re + im_coeff*sqrt(im_radicand)*i.
struct HPoint {
  enum class Kind { CuspInfinity, CuspFinite, Interior };
  Kind kind{Kind::CuspInfinity};
  Rational re{0};
  Rational im_coeff{0};
  int64_t im_radicand{1};

  static HPoint infinity() { return HPoint{}; }
  static HPoint cusp(const Rational& x) { return HPoint{Kind::CuspFinite, x, Rational(0), 1}; }
  static HPoint interior(const Rational& re, const Rational& im_coeff, int64_t radicand);

  friend bool operator==(const HPoint& a, const HPoint& b) {
    return a.kind == b.kind && a.re == b.re && a.im_coeff == b.im_coeff &&
           a.im_radicand == b.im_radicand;
  }
  friend bool operator!=(const HPoint& a, const HPoint& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const HPoint& z);
};

// Trace classification of g in PSL(2,R). trace_squared is the square of the
// trace of the true element, (p + s)^2 / det; elliptic means t^2 < 4 and the
// finite order is read off from t^2 in {0, 1, 2, 3} -> {2, 3, 4, 6}.
struct TraceClass {
  enum class Kind { Elliptic, Parabolic, Hyperbolic };
  Kind kind{Kind::Parabolic};
  int order{0};  // set when elliptic
  Rational trace_squared{0};
};

TraceClass trace_class(const FrickeElement& g);

// Exact Moebius action of g on a cusp or interior point.
HPoint apply(const FrickeElement& g, const HPoint& z);

// Action on a real boundary point (used for hyperbolic fixed points).
Surd apply_boundary(const FrickeElement& g, const Surd& x);

// Fixed point(s) of a non-identity element: an interior HPoint (elliptic),
// a cusp (parabolic), or the two real fixed points ((p-s) +- sqrt(disc))/(2r)
// with disc = (p+s)^2 - 4 det (hyperbolic), plus root first.
struct BoundaryPair {
  Surd plus, minus;
};
using FixedPointSet = std::variant<HPoint, BoundaryPair>;

FixedPointSet fixed_point(const FrickeElement& g);

// Dictionary between (-2)-vectors and the involutions they induce:
// delta = (r, d, s) with delta^2 = -2 maps to (nd, -s; nr, -nd)/sqrt(n).
FrickeElement involution_from_vector(const MukaiVector& delta);

// Inverse direction: a trace-0 element of the Fricke coset (at n = 1, any
// trace-0 element) comes from delta = (r/n, p/n, -q), sign-normalized.
MukaiVector vector_from_involution(const FrickeElement& g);

// Decision procedure for whether the fixed point of an elliptic g is a
// (-2)-point, i.e. is also fixed by an involution induced by a (-2)-vector.
// Takes the fixed-point form (a, b, c) ~ (r, s-p, -q) primitively with a > 0,
// sets lambda = sqrt(4n / |disc(a,b,c)|), and when lambda is rational and
// delta = (lambda a / n, -lambda b / 2n, lambda c) is integral returns that
// certificate (delta^2 = -2 holds automatically). Otherwise returns nothing.
struct TwistCertificate {
  Rational lambda;
  MukaiVector delta;
};

std::optional<TwistCertificate> is_minus_two_point(const FrickeElement& g);

}  // namespace k3
