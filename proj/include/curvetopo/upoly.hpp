#pragma once

#include <vector>

#include "curvetopo/tower.hpp"

namespace curvetopo {

// Dense univariate polynomial over a radical tower field. coeffs[i] is the
// coefficient of x^i; the representation keeps no trailing zeros, so
// deg() == coeffs.size()-1 and the zero polynomial has an empty vector.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<AlgNum> coeffs);
  static UPoly constant(const AlgNum& c);
  static UPoly monomial(const AlgNum& c, int e);

  bool is_zero() const { return co_.empty(); }
  int deg() const { return (int)co_.size() - 1; } // -1 for zero
  const AlgNum& operator[](int i) const;
  const std::vector<AlgNum>& coeffs() const { return co_; }
  const AlgNum& lc() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const AlgNum& s) const;
  UPoly monic() const;
  UPoly derivative() const;
  UPoly pow(long e) const;

  // division with remainder over the field; b nonzero
  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly operator/(const UPoly& b) const; // exact or quotient part
  UPoly operator%(const UPoly& b) const;

  AlgNum eval(const AlgNum& x) const;
  cball eval_ball(const cball& x) const;
  UPoly shifted(const AlgNum& a) const; // p(x+a)

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<AlgNum> co_;
};

UPoly gcd(const UPoly& a, const UPoly& b); // monic gcd

// Sylvester resultant computed by the Euclidean recursion over the field.
AlgNum resultant(const UPoly& a, const UPoly& b);

// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
// factors monic, squarefree, pairwise coprime, product^mult == input up to
// the leading constant. Multiplicities strictly increasing.
std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& p);

UPoly squarefree_part(const UPoly& p);

} // namespace curvetopo
