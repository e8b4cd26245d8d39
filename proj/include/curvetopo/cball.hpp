#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "curvetopo/error.hpp"

namespace curvetopo {

using cplx = std::complex<double>;

// Complex ball: all values within distance r of center c. Every operation
// propagates radii and inflates conservatively for double rounding, so a
// computed ball always encloses the exact result of the interval operation.
struct cball {
  cplx c{0.0, 0.0};
  double r = 0.0;

  cball() = default;
  cball(double re, double im = 0.0, double rad = 0.0) : c(re, im), r(rad) {}
  cball(cplx z, double rad = 0.0) : c(z), r(rad) {}

  double mag_upper() const { return std::abs(c) + r; }
  double mag_lower() const {
    double m = std::abs(c) - r;
    return m > 0 ? m : 0.0;
  }
  bool contains_zero() const { return std::abs(c) <= r; }
  bool nonzero() const { return std::abs(c) > r; }
};

namespace detail {
// one ulp-ish relative slack per arithmetic step, deliberately generous
inline constexpr double kEps = 4.0 * 2.220446049250313e-16;
inline double round_pad(const cplx& z, double extra = 0.0) {
  return (std::abs(z) + extra) * kEps;
}
} // namespace detail

inline cball operator+(const cball& a, const cball& b) {
  cplx c = a.c + b.c;
  return cball(c, a.r + b.r + detail::round_pad(c));
}
inline cball operator-(const cball& a, const cball& b) {
  cplx c = a.c - b.c;
  return cball(c, a.r + b.r + detail::round_pad(c));
}
inline cball operator-(const cball& a) { return cball(-a.c, a.r); }
inline cball operator*(const cball& a, const cball& b) {
  cplx c = a.c * b.c;
  double r = std::abs(a.c) * b.r + std::abs(b.c) * a.r + a.r * b.r;
  return cball(c, r + detail::round_pad(c, r));
}
inline cball operator*(double s, const cball& a) {
  cplx c = s * a.c;
  return cball(c, std::abs(s) * a.r + detail::round_pad(c));
}

inline cball inv(const cball& a) {
  if (a.contains_zero())
    fail(errc::undecidable, "inverse of ball containing zero");
  cplx c = 1.0 / a.c;
  double lo = a.mag_lower();
  double r = a.r / (std::abs(a.c) * lo);
  return cball(c, r + detail::round_pad(c, r));
}
inline cball operator/(const cball& a, const cball& b) { return a * inv(b); }

inline cball pow_int(const cball& a, long e) {
  if (e == 0) return cball(1.0);
  if (e < 0) return inv(pow_int(a, -e));
  cball acc(1.0), base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// k-th roots of the ball, one per branch; caller picks by hint.
std::vector<cball> kth_roots(const cball& a, int k);

// The k-th root branch closest to hint. Errors if the hint is ambiguous
// (two branches within the hint's reach).
cball kth_root_near(const cball& a, int k, cplx hint);

// Distance lower bound between the two balls (0 if they may touch).
inline double dist_lower(const cball& a, const cball& b) {
  double d = std::abs(a.c - b.c) - a.r - b.r;
  return d > 0 ? d : 0.0;
}

inline bool overlap(const cball& a, const cball& b) {
  return std::abs(a.c - b.c) <= a.r + b.r;
}

} // namespace curvetopo
