#pragma once

#include "curvetopo/singularity.hpp"

namespace curvetopo {

// Dual of one branch in standard form (x = t^N, y = series, val >= N):
// u(t) = -y'(t)/x'(t) and w(t) = (x y' - x' y)/x', reparametrized so u is a
// pure power tau^{(s-1)N}.
struct DualBranch {
  PSeries u_series, w_series;       // in the source parameter t
  PuiseuxBranch dual;               // germ over dual coordinates (u, w)
  BranchInvariants dual_invariants; // in the dual's standard orientation
};

DualBranch dual_branch(const PuiseuxBranch& source, TowerBuilder& tb);

// Dual germ of a (single-tangent) singularity report: dual branches,
// pairwise intersections at the dual point, taxonomy label.
struct DualGermReport {
  std::vector<DualBranch> branches;
  std::vector<std::vector<int>> intersections;
  std::string label;
  std::vector<std::string> aliases;
};

DualGermReport dual_singularity_type(const SingularityReport& rep,
                                     TowerBuilder& tb);

// Degree of the dual curve by elimination: tangency points whose tangent
// line passes a random rational probe, minus singular-point contributions,
// validated with a second probe. Deterministic for a fixed seed.
int dual_degree(const MultiPoly& f, unsigned long seed = 20260809);

} // namespace curvetopo
