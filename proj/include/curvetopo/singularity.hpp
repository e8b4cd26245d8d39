#pragma once

#include "curvetopo/braid.hpp"
#include "curvetopo/factor.hpp"
#include "curvetopo/puiseux.hpp"

namespace curvetopo {

struct SingularPoint {
  std::vector<AlgNum> coords; // affine (x, y), exact when available
  bool exact = true;
  std::array<cball, 2> box{};
  int multiplicity = 2;     // local multiplicity of the curve germ
  bool at_infinity = false; // coords then hold (X, Y) with Z = 0
};

// All singular points of the projective curve defined by (the homogenization
// of) f: affine solutions of f = f_x = f_y = 0 plus the line-at-infinity
// check. Points with coordinates in the tower are exact; others are
// certified boxes (exact = false).
std::vector<SingularPoint> find_singular_points(const MultiPoly& f);

// Local classification data at one singular point.
struct SingularityReport {
  std::vector<AlgNum> location;
  std::vector<PuiseuxBranch> branches;         // common orientation (y over x)
  std::vector<BranchInvariants> invariants;    // per branch, standard form
  std::vector<std::vector<int>> intersections; // symmetric, diagonal unused
  int multiplicity = 0;
  long milnor = 0;
  std::string label;                // A2, E6, B(3,10), C(3,9), Sp1, ...
  std::vector<std::string> aliases; // e.g. E6 <-> B(3,4)
  TowerPtr tower;
};

// Intersection number of two branches at a shared point, via valuations of
// conjugate differences. Branches must share base point and orientation.
int intersection_number(const PuiseuxBranch& a, const PuiseuxBranch& b,
                        TowerBuilder& tb);

// Branch decomposition + pairwise intersections + taxonomy label matched on
// topological data (pairs and intersections). Unrecognized germs get the
// label "unrecognized" with all raw data retained.
SingularityReport classify_singularity(const MultiPoly& f,
                                       const std::vector<AlgNum>& point,
                                       TowerBuilder& tb);

// Milnor number of one branch in standard orientation, from its
// characteristic chain.
long branch_milnor(const BranchInvariants& inv);

// Topological germ data shared by the primal and dual classifiers.
struct GermData {
  std::vector<BranchInvariants> inv;
  std::vector<int> tangent_kind;   // 0 dep axis, 1 param axis, 2 slanted
  std::vector<XNum> tangent_slope; // meaningful for kind 2
  std::vector<std::vector<int>> inter;
};

// Taxonomy matching on (pairs, tangents, intersections); "unrecognized"
// when no normal-form criterion fits.
std::string taxonomy_label(const GermData& g,
                           std::vector<std::string>* aliases);

// Local contribution of the point to the discriminant multiplicity for the
// pencil param_var: mu + (local intersection with the pencil line) - 1.
long discriminant_defect(const MultiPoly& f, const SingularityReport& rep,
                         int param_var);

// Braid of the local fiber cluster over a small counterclockwise circle in
// the pencil parameter, computed from the branch parametrizations (series
// model, heuristically padded balls; cross-checked elsewhere against the
// certified global tracker).
BraidWord local_braid(const MultiPoly& f, const SingularityReport& rep,
                      int pencil_var, double radius = 1e-3);

} // namespace curvetopo
