#pragma once

#include <map>
#include <optional>

#include "curvetopo/multipoly.hpp"

namespace curvetopo {

// A number that is exact (tower element) when possible and always carries a
// certified enclosing ball. Arithmetic stays exact while both operands are;
// once a value leaves every available tower only the ball survives.
struct XNum {
  std::optional<AlgNum> exact;
  cball box;

  XNum() : exact(AlgNum()), box(0.0) {}
  XNum(const AlgNum& a) : exact(a), box(a.approx()) {}
  XNum(const Rat& q) : XNum(AlgNum(q)) {}
  XNum(const cball& b) : box(b) {}

  bool is_exact() const { return exact.has_value(); }
  bool known_zero() const { return exact ? exact->is_zero() : false; }
  bool known_nonzero() const {
    return exact ? !exact->is_zero() : box.nonzero();
  }
  // true when neither zero nor nonzero can be certified
  bool ambiguous() const { return !exact && !box.nonzero(); }

  std::string str() const;
};

XNum operator+(const XNum& a, const XNum& b);
XNum operator-(const XNum& a, const XNum& b);
XNum operator*(const XNum& a, const XNum& b);
XNum operator/(const XNum& a, const XNum& b);
XNum operator-(const XNum& a);
XNum xnum_pow(const XNum& a, long e);

// Truncated sparse power series in one parameter t: exponent -> coefficient,
// valid modulo t^trunc. Exact-zero coefficients are never stored.
class PSeries {
public:
  PSeries() = default;
  explicit PSeries(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  void set_trunc(int t);
  const std::map<int, XNum>& terms() const { return terms_; }
  bool known_zero() const { return terms_.empty(); }

  void add_term(int e, const XNum& c);
  XNum coeff(int e) const; // exact zero if absent and e < trunc

  // least exponent with a certifiably nonzero coefficient; errors
  // (undecidable) when an ambiguous lower coefficient blocks the decision,
  // nullopt when identically zero up to truncation
  std::optional<int> valuation() const;

  PSeries shifted(int k) const; // multiply by t^k (k may be negative)
  PSeries twisted(const XNum& zeta) const; // t -> zeta * t

  friend PSeries operator+(const PSeries& a, const PSeries& b);
  friend PSeries operator-(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  PSeries operator-() const;
  PSeries scaled(const XNum& s) const;
  PSeries pow(long e) const;
  PSeries derivative() const;

  // substitute t -> inner (valuation >= 1), truncation tracked
  PSeries compose(const PSeries& inner) const;

  // multiplicative inverse of a series with known-nonzero constant term
  PSeries inverse() const;

  cball eval_ball(const cball& t) const;
  std::string str(const std::string& var = "t") const;

private:
  std::map<int, XNum> terms_;
  int trunc_ = 0;
};

// Evaluates a bivariate polynomial along parametrized coordinates
// (per-variable series in a common parameter).
PSeries eval_on_series(const MultiPoly& f, const std::vector<PSeries>& coords);

} // namespace curvetopo
