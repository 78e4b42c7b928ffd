#pragma once

#include <array>
#include <ostream>

#include "k3/checked.hpp"

namespace k3 {

// Vector (r, d, s) in the rank-3 lattice Z^3 attached to a degree-2n K3
// surface, with pairing  (r1,d1,s1).(r2,d2,s2) = 2n d1 d2 - r1 s2 - r2 s1.
// Signature (2, 1); Gram matrix [[0,0,-1],[0,2n,0],[-1,0,0]].
struct MukaiVector {
  int64_t n{1};
  int64_t r{0};
  int64_t d{0};
  int64_t s{0};

  MukaiVector() = default;
  MukaiVector(int64_t n_, int64_t r_, int64_t d_, int64_t s_) : n(n_), r(r_), d(d_), s(s_) {
    require(n >= 1, "MukaiVector: n must be a positive integer");
  }

  bool is_zero() const { return r == 0 && d == 0 && s == 0; }

  int64_t content() const { return gcd64(gcd64(abs64(r), abs64(d)), abs64(s)); }

  // Divide out the content and make the first nonzero coordinate positive.
  MukaiVector primitive() const {
    require(!is_zero(), "primitive part of the zero vector");
    int64_t g = content();
    MukaiVector v(n, r / g, d / g, s / g);
    int64_t lead = v.r != 0 ? v.r : v.d != 0 ? v.d : v.s;
    if (lead < 0) v = MukaiVector(n, neg64(v.r), neg64(v.d), neg64(v.s));
    return v;
  }

  MukaiVector operator-() const { return MukaiVector(n, neg64(r), neg64(d), neg64(s)); }

  friend bool operator==(const MukaiVector& u, const MukaiVector& v) {
    return u.n == v.n && u.r == v.r && u.d == v.d && u.s == v.s;
  }
  friend bool operator!=(const MukaiVector& u, const MukaiVector& v) { return !(u == v); }

  friend std::ostream& operator<<(std::ostream& os, const MukaiVector& v) {
    return os << "(" << v.r << ", " << v.d << ", " << v.s << ")";
  }
};

inline int64_t pairing(const MukaiVector& u, const MukaiVector& v) {
  require(u.n == v.n, "pairing: vectors from different lattices");
  __int128 acc = static_cast<__int128>(2) * u.n * u.d * v.d;
  acc -= static_cast<__int128>(u.r) * v.s;
  acc -= static_cast<__int128>(v.r) * u.s;
  return narrow128(acc, "pairing");
}

inline int64_t square(const MukaiVector& v) { return pairing(v, v); }

}  // namespace k3
