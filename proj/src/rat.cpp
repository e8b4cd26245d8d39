#include "curvetopo/rat.hpp"

#include <cctype>
#include <cmath>

namespace curvetopo {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(errc::invalid_input, "empty rational literal");
  for (char c : s)
    if (!std::isdigit((unsigned char)c) && c != '/' && c != '-' && c != '+')
      fail(errc::invalid_input, "bad rational literal: " + s);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    fail(errc::invalid_input, "bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() == 0) fail(errc::invalid_input, "zero denominator: " + s);
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& q, long e) {
  if (e < 0) {
    if (q == 0) fail(errc::invalid_input, "0^negative");
    return rat_pow(Rat(1) / q, -e);
  }
  Rat acc(1), base(q);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

double rat_double(const Rat& q) { return q.get_d(); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

std::optional<Rat> rat_reconstruct(double x, unsigned long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction expansion of x
  double v = x;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e18 || fl < -9e18) return std::nullopt;
    Int a((long)fl);
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > Int((unsigned long)max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rat cand(p1, q1);
    cand.canonicalize();
    if (std::abs(cand.get_d() - x) <= tol) return cand;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Int> int_kth_root(const Int& n, int k) {
  if (k <= 0) return std::nullopt;
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = int_kth_root(-n, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rat> rat_kth_root(const Rat& q, int k) {
  auto n = int_kth_root(Int(q.get_num()), k);
  if (!n) return std::nullopt;
  auto d = int_kth_root(Int(q.get_den()), k);
  if (!d) return std::nullopt;
  Rat r(*n, *d);
  r.canonicalize();
  return r;
}

} // namespace curvetopo
