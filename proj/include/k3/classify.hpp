#pragma once

#include <string>
#include <variant>

#include "k3/fricke_group.hpp"
#include "k3/mukai.hpp"

namespace k3 {

// Exclusive classification of a non-identity element of Gamma0+(n), seen as
// the shadow of an autoequivalence of a degree-2n K3 surface of Picard
// rank 1:
//
//   FiniteOrder            elliptic, fixed point not a (-2)-point; the
//                          autoequivalence class has finite order
//   MinusTwoReducible      involution induced by the spherical twist along
//                          delta (elliptic of order 2 at a (-2)-point)
//   ZeroReducible          parabolic; preserves the isotropic class w
//   PseudoAnosov           hyperbolic; exact spectral radius > 1
//   EllipticAtMinusTwoPoint  elliptic of order > 2 whose fixed point is a
//                          (-2)-point (shares it with a twist involution;
//                          occurs at n = 3); reported distinctly, not merged
//                          into either neighbouring class
struct FiniteOrder {
  int order;
  HPoint point;
};
struct MinusTwoReducible {
  MukaiVector delta;
};
struct ZeroReducible {
  MukaiVector w;
};
struct PseudoAnosov {
  Surd spectral_radius;
};
struct EllipticAtMinusTwoPoint {
  int order;
  MukaiVector delta;
};

using PolychotomyResult =
    std::variant<FiniteOrder, MinusTwoReducible, ZeroReducible, PseudoAnosov,
                 EllipticAtMinusTwoPoint>;

PolychotomyResult classify_element(const FrickeElement& g);

// Generator of the stabilizer in Gamma0+(n) of the cusp attached to a
// primitive isotropic w = (r, d, s) (the cusp d/r, or oo when r = 0); this is
// the image of the group of autoequivalences fixing w. The kernel of that
// image is recorded as a label: shifts only, plus the extra involution in
// degree 2.
struct CuspStabilizer {
  FrickeElement generator;
  HPoint cusp;
  std::string kernel;
};

CuspStabilizer cusp_stabilizer(int64_t n, const MukaiVector& w);

}  // namespace k3
