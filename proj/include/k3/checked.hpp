#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

#include "k3/errors.hpp"

namespace k3 {

using std::int64_t;

// Overflow-checked int64 helpers. All exact computations in the library go
// through these (or through __int128 intermediates that are range-checked on
// the way back), so results are either correct or an OverflowError.

inline int64_t add64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in +");
  return r;
}

inline int64_t sub64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in -");
  return r;
}

inline int64_t mul64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in *");
  return r;
}

inline int64_t neg64(int64_t a) { return sub64(0, a); }

inline int64_t abs64(int64_t a) { return a < 0 ? neg64(a) : a; }

// a/b when b exactly divides a; anything else is a broken internal identity.
inline int64_t exact_div(int64_t a, int64_t b, const char* what) {
  ensure(b != 0 && a % b == 0, std::string("inexact division in ") + what);
  return a / b;
}

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

// Nonnegative remainder, also for negative a.
inline int64_t mod64(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + abs64(m) : r;
}

inline int64_t narrow128(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError(std::string("int64 overflow in ") + what);
  return static_cast<int64_t>(v);
}

// Floor of sqrt(a), a >= 0, exact.
inline int64_t isqrt64(int64_t a) {
  ensure(a >= 0, "isqrt of negative number");
  if (a < 2) return a;
  int64_t x = static_cast<int64_t>(std::sqrt(static_cast<double>(a)));
  while (x > 0 && x > a / x) --x;
  while ((x + 1) <= a / (x + 1)) ++x;
  return x;
}

}  // namespace k3
