#include "k3/mukai.hpp"

namespace k3 {

namespace {

using Mat3 = std::array<std::array<int64_t, 3>, 3>;

// Gram matrix of the pairing in coordinates (r, d, s).
Mat3 gram(int64_t n) {
  return {{{0, 0, -1}, {0, mul64(2, n), 0}, {-1, 0, 0}}};
}

Mat3 multiply(const Mat3& a, const Mat3& b, const char* what) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < 3; ++k) acc += static_cast<__int128>(a[i][k]) * b[k][j];
      c[i][j] = narrow128(acc, what);
    }
  return c;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

__int128 det128(const Mat3& m) {
  __int128 d = 0;
  d += static_cast<__int128>(m[0][0]) *
       (static_cast<__int128>(m[1][1]) * m[2][2] - static_cast<__int128>(m[1][2]) * m[2][1]);
  d -= static_cast<__int128>(m[0][1]) *
       (static_cast<__int128>(m[1][0]) * m[2][2] - static_cast<__int128>(m[1][2]) * m[2][0]);
  d += static_cast<__int128>(m[0][2]) *
       (static_cast<__int128>(m[1][0]) * m[2][1] - static_cast<__int128>(m[1][1]) * m[2][0]);
  return d;
}

}  // namespace

LatticeIsometry LatticeIsometry::from_matrix(int64_t n, const Mat3& m) {
  require(n >= 1, "LatticeIsometry: n must be a positive integer");
  LatticeIsometry iso{n, m};
  require(iso.det() == 1 || iso.det() == -1, "isometry must have determinant +-1");
  require(iso.preserves_pairing(), "matrix does not preserve the pairing");
  return iso;
}

LatticeIsometry LatticeIsometry::identity(int64_t n) {
  return LatticeIsometry{n, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

int64_t LatticeIsometry::det() const { return narrow128(det128(m), "isometry det"); }

bool LatticeIsometry::preserves_pairing() const {
  return multiply(multiply(transpose(m), gram(n), "gram check"), m, "gram check") == gram(n);
}

bool LatticeIsometry::is_identity() const { return m == identity(n).m; }

MukaiVector LatticeIsometry::operator()(const MukaiVector& v) const {
  require(v.n == n, "isometry applied to vector from a different lattice");
  std::array<int64_t, 3> in{v.r, v.d, v.s}, out{};
  for (int i = 0; i < 3; ++i) {
    __int128 acc = 0;
    for (int k = 0; k < 3; ++k) acc += static_cast<__int128>(m[i][k]) * in[k];
    out[i] = narrow128(acc, "isometry apply");
  }
  return MukaiVector(n, out[0], out[1], out[2]);
}

LatticeIsometry LatticeIsometry::operator-() const {
  LatticeIsometry neg = *this;
  for (auto& row : neg.m)
    for (auto& x : row) x = neg64(x);
  return neg;
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  require(a.n == b.n, "composing isometries of different lattices");
  return LatticeIsometry{a.n, multiply(a.m, b.m, "isometry product")};
}

LatticeIsometry induced_isometry(const FrickeElement& g) {
  const int64_t n = g.n, p = g.p, q = g.q, r = g.r, s = g.s;
  Mat3 m{};
  if (g.tag == DetTag::Unit) {
    m[0] = {mul64(s, s), mul64(2, mul64(r, s)), exact_div(mul64(r, r), n, "induced r^2/n")};
    m[1] = {mul64(q, s), add64(mul64(p, s), mul64(q, r)),
            exact_div(mul64(p, r), n, "induced pr/n")};
    m[2] = {mul64(n, mul64(q, q)), mul64(2, mul64(n, mul64(p, q))), mul64(p, p)};
  } else {
    const int64_t n2 = mul64(n, n);
    m[0] = {exact_div(mul64(s, s), n, "induced s^2/n"),
            exact_div(mul64(2, mul64(r, s)), n, "induced 2rs/n"),
            exact_div(mul64(r, r), n2, "induced r^2/n^2")};
    m[1] = {exact_div(mul64(q, s), n, "induced qs/n"),
            exact_div(add64(mul64(p, s), mul64(q, r)), n, "induced (ps+qr)/n"),
            exact_div(mul64(p, r), n2, "induced pr/n^2")};
    m[2] = {mul64(q, q), mul64(2, mul64(p, q)), exact_div(mul64(p, p), n, "induced p^2/n")};
  }
  LatticeIsometry iso{n, m};
  ensure(iso.det() == 1, "induced isometry must have determinant 1");
  ensure(iso.preserves_pairing(), "induced isometry must preserve the pairing");
  return iso;
}

LatticeIsometry reflection(const MukaiVector& delta) {
  require(square(delta) == -2, "reflection: delta^2 must be -2");
  const int64_t n = delta.n, r = delta.r, d = delta.d, s = delta.s;
  // Columns are e_i + (e_i . delta) delta with e_i . delta in {-s, 2nd, -r}.
  Mat3 m{};
  const int64_t dots[3] = {neg64(s), mul64(2, mul64(n, d)), neg64(r)};
  const int64_t comp[3] = {r, d, s};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = add64(i == j ? 1 : 0, mul64(dots[j], comp[i]));
  LatticeIsometry iso{n, m};
  ensure(iso.det() == -1, "reflection must have determinant -1");
  ensure(iso.preserves_pairing(), "reflection must preserve the pairing");
  ensure(iso(delta) == -delta, "reflection must negate its vector");
  return iso;
}

EigenData eigen_data(const LatticeIsometry& M, const FrickeElement& g) {
  require(!g.is_identity(), "eigen_data: identity excluded");
  require(M == induced_isometry(g), "eigen_data: M must be the isometry induced by g");

  EigenData e;
  const int64_t det = g.det();
  const int64_t t2 = exact_div(mul64(g.trace(), g.trace()), det, "trace square");
  e.trace_squared = Rational(t2);

  MukaiVector v_raw(g.n, mul64(2, g.r), sub64(g.p, g.s), neg64(mul64(2, mul64(g.n, g.q))));
  ensure(!v_raw.is_zero(), "eigenvector formula vanished on a non-identity element");
  ensure(M(v_raw) == v_raw, "eigenvector formula not fixed by M");
  e.eigen_one_vector = v_raw.primitive();

  // Square of the true fixed vector: the raw integer vector is sqrt(det)
  // times it, so divide its square by det.
  e.eigen_one_square = exact_div(square(v_raw), det, "eigen_one_square");
  ensure(e.eigen_one_square == narrow128(static_cast<__int128>(2) * g.n * (t2 - 4),
                                         "2n(t^2-4)"),
         "fixed-vector square must equal 2n(t^2 - 4)");

  // mu_+- = ((t^2 - 2) +- sqrt(t^2 (t^2 - 4))) / 2, a conjugate pair on the
  // unit circle when elliptic and a reciprocal real pair when hyperbolic.
  const Rational half_shift(sub64(t2, 2), 2);
  if (t2 < 4) {
    Surd im = Surd::sqrt_of(Rational(mul64(t2, sub64(4, t2)), 4));
    e.mu_plus = {Surd(half_shift), im};
    e.mu_minus = {Surd(half_shift), -im};
  } else {
    Surd shift = Surd::sqrt_of(Rational(mul64(t2, sub64(t2, 4)), 4));
    e.mu_plus = {Surd(half_shift) + shift, Surd(Rational(0))};
    e.mu_minus = {Surd(half_shift) - shift, Surd(Rational(0))};
  }

  e.jordan_block_3 = (t2 == 4 && !M.is_identity());

  if (t2 > 4) {
    e.spectral_radius = e.mu_plus.re;
    ensure(e.spectral_radius->sign() > 0 && (*e.spectral_radius - Surd(Rational(1))).sign() > 0,
           "spectral radius of a hyperbolic element must exceed 1");
  }
  return e;
}

int det_disc(const FrickeElement& g) {
  require(g.n >= 2, "det_disc: defined only for n >= 2");
  LatticeIsometry M = induced_isometry(g);
  ensure(M.det() == 1, "det_disc: induced isometry must have det 1");
  // Action on the discriminant group Z/2n: the generator (0, 1/2n, 0) maps to
  // (multiplier/2n) * generator modulo the lattice, multiplier = M[1][1].
  const int64_t two_n = mul64(2, g.n);
  const int64_t mult = mod64(M.m[1][1], two_n);
  int disc;
  if (mult == 1) {
    disc = 1;
  } else if (mult == two_n - 1) {
    disc = -1;
  } else {
    throw InternalError("discriminant action is not +-1");
  }
  const int expected = g.tag == DetTag::Unit ? 1 : -1;
  ensure(disc == expected, "det*disc must be +1 exactly on Gamma0(n)");
  return disc;
}

}  // namespace k3
