#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvetopo/upoly.hpp"

namespace curvetopo {

// Sparse multivariate polynomial over a radical tower. Terms map exponent
// vectors (one slot per variable, fixed ordered name list) to nonzero
// coefficients; degree bookkeeping is recomputed from the stored exponents.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars,
            std::map<std::vector<int>, AlgNum> terms);

  static MultiPoly constant(std::vector<std::string> vars, const AlgNum& c);
  static MultiPoly variable(std::vector<std::string> vars, int index);

  const std::vector<std::string>& vars() const { return vars_; }
  int var_index(const std::string& name) const; // -1 if absent
  const std::map<std::vector<int>, AlgNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree(int var) const;           // -1 for zero polynomial
  int total_degree() const;            // -1 for zero polynomial
  bool is_constant() const;
  AlgNum constant_value() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const AlgNum& s) const;
  MultiPoly pow(long e) const;

  MultiPoly derivative(int var) const;

  // coefficients of var^0, var^1, ... as polynomials in the other variables
  std::vector<MultiPoly> coeffs_in(int var) const;

  MultiPoly substitute(int var, const AlgNum& value) const;
  // general composition: replace each variable by the given polynomial
  // (all replacement polynomials share one variable list, which becomes the
  // result's variable list)
  MultiPoly compose(const std::vector<MultiPoly>& repl) const;

  AlgNum eval(const std::vector<AlgNum>& point) const;
  cball eval_ball(const std::vector<cball>& point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // univariate view; requires all other variables absent
  UPoly to_upoly(int var) const;
  static MultiPoly from_upoly(const UPoly& p, std::vector<std::string> vars,
                              int var);

  std::string str() const;

private:
  void insert_term(const std::vector<int>& e, const AlgNum& c);
  std::vector<std::string> vars_;
  std::map<std::vector<int>, AlgNum> terms_;
};

// Parses an expression with +,-,*,^,(), integer literals, variable names and
// tower extension names, e.g. "(y-x^2)^3 + (t0*y*x + 2*y^3 - t0*x^3)^2".
MultiPoly parse_multipoly(const TowerPtr& tw,
                          const std::vector<std::string>& vars,
                          const std::string& text);

// Sylvester resultant of f and g eliminating `var`, computed by evaluation
// of the other variable at rational nodes (skipping leading coefficient
// zeros) and Newton interpolation. f and g must be at most bivariate.
MultiPoly resultant_elim(const MultiPoly& f, const MultiPoly& g,
                         const std::string& var);

// Res_var(f, df/dvar); requires deg_var(f) >= 2. Raw resultant convention:
// agreement with printed discriminants is up to a nonzero constant.
MultiPoly discriminant(const MultiPoly& f, const std::string& var);

// True when a/b is a constant of the field (b nonzero).
bool proportional(const MultiPoly& a, const MultiPoly& b);

} // namespace curvetopo
