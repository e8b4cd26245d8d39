#pragma once

#include "curvetopo/multipoly.hpp"
#include "curvetopo/roots.hpp"

namespace curvetopo {

// Factor of a univariate polynomial: monic piece plus multiplicity.
struct SquarefreeFactor {
  MultiPoly factor;
  int multiplicity = 1;
};

// Squarefree decomposition of a univariate polynomial over the tower, with
// linear factors split off exactly whenever a root is recognized in the
// coefficient field (rational or rational multiple of a basis monomial).
// The product of factor^multiplicity equals p up to a nonzero constant.
std::vector<SquarefreeFactor> squarefree_factor(const MultiPoly& p);

// Splits off every tower-recognizable root of a squarefree factor; returns
// the roots (with the residual factor left in f).
std::vector<AlgNum> split_tower_roots(UPoly& f);

} // namespace curvetopo
