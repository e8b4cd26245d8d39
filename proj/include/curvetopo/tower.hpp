#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvetopo/cball.hpp"
#include "curvetopo/rat.hpp"

namespace curvetopo {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// A tower of radical extensions of Q. Level i adjoins a generator g_i with
// g_i^{d_i} equal to an element of the field below (coords over that
// subfield's monomial basis), together with a certified ball selecting which
// d_i-th root is meant. Irreducibility of x^d - v over the subfield is
// accepted as declared; a wrong declaration surfaces later as a zero-divisor
// error during inversion, never as silent corruption.
class Tower {
public:
  struct Level {
    std::string name;
    int deg = 2;
    std::vector<Rat> rad; // size dim_below(level index)
    cball gen;            // certified generator value
  };

  static TowerPtr rationals();

  TowerPtr extend(const std::string& name, int deg,
                  const std::vector<Rat>& rad_coords, cplx hint) const;

  int num_levels() const { return (int)levels_.size(); }
  const Level& level(int i) const { return levels_[i]; }
  int dim() const { return dim_; }
  int dim_below(int lev) const { return dim_below_[lev]; }
  bool is_prefix_of(const Tower& big) const;
  bool same_as(const Tower& other) const;
  int find_level(const std::string& name) const;

private:
  friend class AlgNum;
  std::vector<Level> levels_;
  std::vector<int> dim_below_{1}; // dim_below_[i] = prod of degs of levels < i
  int dim_ = 1;
};

// Exact element of a radical tower: flat coordinate vector over the monomial
// basis g_1^{e_1}...g_k^{e_k}, e_i < d_i, level-1 exponent fastest. Values are
// immutable and safe to share across threads.
class AlgNum {
public:
  AlgNum(); // zero over Q
  AlgNum(const Rat& q);
  AlgNum(long n);
  AlgNum(TowerPtr tw, std::vector<Rat> coords);

  static AlgNum generator(const TowerPtr& tw, int level);
  static AlgNum basis_monomial(const TowerPtr& tw, int flat_index);

  const TowerPtr& tower() const { return tw_; }
  const std::vector<Rat>& coords() const { return co_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rat_value() const; // requires is_rational()

  AlgNum embedded(const TowerPtr& big) const;

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
  AlgNum operator-() const;
  AlgNum inverse() const;
  AlgNum pow(long e) const;

  friend bool operator==(const AlgNum& a, const AlgNum& b);
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  cball approx() const;
  std::string str() const;

private:
  TowerPtr tw_;
  std::vector<Rat> co_;
};

// Joins the towers of a and b: both must live in towers where one is a prefix
// of the other; lifts the smaller element. Errors on incompatible towers.
void align(AlgNum& a, AlgNum& b);

// Parses an expression over the tower's generator names:
//   expr := ['-'] term (('+'|'-') term)*
//   term := atom (('*'|'/') atom)*
//   atom := integer | name ['^' integer]
// e.g. "3/4*sqrt3", "sqrt4_3^3/423", "-5400/239*sqrt3-7776/239*sqrt2".
AlgNum parse_algnum(const TowerPtr& tw, const std::string& text);

} // namespace curvetopo
