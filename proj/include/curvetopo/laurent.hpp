#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvetopo/rat.hpp"

namespace curvetopo {

// Laurent polynomial over Q in one variable t.
struct LPoly {
  std::map<int, Rat> c; // exponent -> nonzero coefficient

  LPoly() = default;
  static LPoly term(const Rat& q, int e);
  static LPoly one() { return term(Rat(1), 0); }

  bool is_zero() const { return c.empty(); }
  void add(int e, const Rat& q);
  std::string str() const;

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly operator-() const;
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c == b.c; }
};

// Normalization used for Alexander polynomials: strip t^k, clear
// denominators to a primitive integer polynomial, lowest-degree coefficient
// positive. Zero stays zero.
LPoly alexander_normalize(const LPoly& p);

// Diagonal of the Smith form over Q[t,t^{-1}] (a PID); entries normalized.
std::vector<LPoly> smith_laurent(std::vector<std::vector<LPoly>> m);

// parse e.g. "t^2-t+1" (integer coefficients)
LPoly parse_lpoly(const std::string& text);

} // namespace curvetopo
