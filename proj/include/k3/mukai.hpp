#pragma once

#include <array>

#include "k3/fricke_group.hpp"
#include "k3/mukai_vector.hpp"
#include "k3/surd.hpp"

namespace k3 {

// Integral isometry of the rank-3 lattice of a degree-2n K3 surface, stored
// as a 3x3 matrix acting on column vectors (r, d, s). Construction checks
// that the pairing is preserved and det = +-1.
struct LatticeIsometry {
  int64_t n{1};
  std::array<std::array<int64_t, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static LatticeIsometry from_matrix(int64_t n, const std::array<std::array<int64_t, 3>, 3>& m);
  static LatticeIsometry identity(int64_t n);

  int64_t det() const;
  bool preserves_pairing() const;
  bool is_identity() const;

  MukaiVector operator()(const MukaiVector& v) const;
  LatticeIsometry operator-() const;
  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);

  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.n == b.n && a.m == b.m;
  }
  friend bool operator!=(const LatticeIsometry& a, const LatticeIsometry& b) { return !(a == b); }
};

// The det = +1 isometry induced by g in Gamma0+(n). For a Unit element
// (p q; r s) it is
//   [ s^2    2rs      r^2/n ]
//   [ qs     ps+qr    pr/n  ]
//   [ nq^2   2npq     p^2   ]
// and for a Fricke element the same formula applied to the true entries
// (p, q, r, s)/sqrt(n); the divisibility constraints make it integral.
// Both signs +-M describe g; this returns the det = +1 representative
// (negate for the reflection-like one, det(-M) = -1 in rank 3).
LatticeIsometry induced_isometry(const FrickeElement& g);

// Reflection x -> x + (x . delta) delta along a (-2)-vector.
// Equals -induced_isometry(involution_from_vector(delta)); det = -1.
LatticeIsometry reflection(const MukaiVector& delta);

// Spectral data of M = induced_isometry(g), g != identity:
//   eigenvalue 1 with integral eigenvector ~ (2r, p-s, -2nq),
//   remaining pair mu+- = ((t^2 - 2) +- t sqrt(t^2 - 4)) / 2,
//   square of the (true) fixed vector = 2n (t^2 - 4).
struct ComplexSurd {
  Surd re, im;  // re + im * i, both exact
};

struct EigenData {
  Rational trace_squared{0};
  MukaiVector eigen_one_vector;
  int64_t eigen_one_square{0};
  ComplexSurd mu_plus, mu_minus;
  bool jordan_block_3{false};     // t^2 = 4 and M != 1: rank-3 unipotent
  std::optional<Surd> spectral_radius;  // set when hyperbolic; > 1 exactly
};

EigenData eigen_data(const LatticeIsometry& M, const FrickeElement& g);

// The homomorphism Gamma0+(n) -> {+-1}, g -> det(M) * disc(M), n >= 2:
// disc(M) is the action on the discriminant group Z/2n (generated by
// (0, 1/2n, 0)), which is multiplication by ps+qr mod 2n for Unit elements
// and by (ps+qr)/n mod 2n for Fricke ones; both are +-1. Unit elements give
// +1, Fricke elements -1, and the kernel is exactly Gamma0(n).
int det_disc(const FrickeElement& g);

}  // namespace k3
