#pragma once

#include "curvetopo/series.hpp"
#include "curvetopo/towerext.hpp"

namespace curvetopo {

// Truncation sentinel marking a series that terminates exactly (polynomial
// branch); anything at or above this is "known to the end".
inline constexpr int kExactTrunc = 1 << 27;

// One local analytic branch at base_point: after translating the point to
// the origin, the param_var coordinate equals t^ram and the dep_var
// coordinate equals series(t). Conjugate branches (t -> zeta_ram * t) are
// represented by this single series.
struct PuiseuxBranch {
  std::vector<std::string> vars;
  std::vector<AlgNum> base_point;
  int param_var = 1;
  int dep_var = 0;
  int ram = 1;
  PSeries series;
  TowerPtr tower;

  const std::string& param_name() const { return vars[(size_t)param_var]; }
  const std::string& dep_name() const { return vars[(size_t)dep_var]; }
};

// Characteristic powers P(h;n) = {nu_1,...,nu_k} and the gcd chain
// D = {n^(1),...,n^(k)} per the min{j > 0 : a_j != 0, j !≡ 0 mod n} recursion.
struct CharChain {
  std::vector<int> P;
  std::vector<int> D;
};

// Complete-list semantics: exponents are all the nonzero-coefficient
// exponents of the series.
CharChain characteristic_powers(const std::vector<int>& exponents, int n);

// Truncation-aware: errors (undecidable) if the chain is still open when the
// stored terms run out before trunc, or an ambiguous coefficient blocks a
// decision.
CharChain characteristic_powers(const PSeries& s, int n);

// Derived branch invariants in the branch's own orientation.
struct BranchInvariants {
  int N = 1;                              // ramification index
  int S = 0;                              // valuation of the series
  Rat order;                              // s = S/N
  CharChain chain;                        // P, D for the series w.r.t. N
  std::vector<std::pair<int, int>> pairs; // (m_i, n_i)
};

BranchInvariants puiseux_invariants(const PuiseuxBranch& b);

// Swaps parametrization roles by certified series reversion: the result has
// param_var = b.dep_var with ram = val(b.series). The builder supplies any
// radical needed for the leading-coefficient root.
PuiseuxBranch invert_parametrization(const PuiseuxBranch& b, TowerBuilder& tb);

// Solves phi(t(tau)) = tau^val(phi) for the reparametrization t(tau) =
// c1 tau + ... by certified Newton iteration in the series ring; the leading
// root is taken exactly in the (grown) tower when possible.
PSeries power_reparam(const PSeries& phi, TowerBuilder& tb);

// Re-orients a branch so that val(series) >= ram, i.e. the tangent line at
// the point is the dep-coordinate axis (inverting when necessary).
PuiseuxBranch standard_form(const PuiseuxBranch& b, TowerBuilder& tb);

// All local branches of f at the point, with dep_var expanded as Puiseux
// series in param_var. Truncation auto-extends until every branch's
// characteristic chain closes, plus 2*ram guard terms. min_trunc (if > 0)
// forces at least that many series orders.
std::vector<PuiseuxBranch> newton_puiseux(const MultiPoly& f,
                                          const std::vector<AlgNum>& point,
                                          int param_var, TowerBuilder& tb,
                                          int min_trunc = 0);

// Residual check: valuation of f along the branch parametrization, certified
// >= the series truncation. Returns false only when a known-nonzero residual
// coefficient appears (which indicates a broken expansion).
bool branch_residual_ok(const MultiPoly& f, const PuiseuxBranch& b);

// Fiber positions contributed by this branch over param = base + eta
// (|eta| small): ram points, dep-coordinates, certified balls.
std::vector<cball> branch_fiber_points(const PuiseuxBranch& b,
                                       const cball& eta);

} // namespace curvetopo
