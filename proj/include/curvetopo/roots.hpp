#pragma once

#include <optional>
#include <vector>

#include "curvetopo/upoly.hpp"

namespace curvetopo {

// One isolated root: a certified disk containing exactly one root of the
// squarefree part, its multiplicity in the original polynomial, and an exact
// tag when the root was recognized in the coefficient tower.
struct IsolatedRoot {
  cball disk;
  int multiplicity = 1;
  std::optional<AlgNum> exact;
};

// Aberth-Ehrlich simultaneous iteration on double coefficients (low degree
// fastest varying). Returns approximations only; callers certify separately.
std::vector<cplx> aberth(const std::vector<cplx>& coeffs, int max_iter = 200);

// For each approximation z, a disk around z guaranteed to contain a root of
// the (ball-coefficient) polynomial, by the n*|p/p'| Newton bound. Empty
// result if certification fails (derivative ball containing zero).
std::optional<std::vector<cball>> certify_roots(
    const std::vector<cball>& coeffs, const std::vector<cplx>& approx);

// Full isolation pipeline: exact squarefree decomposition, rational/tower
// root recognition, Aberth + certification per squarefree factor, Newton
// refinement to the target radius, pairwise-disjointness check across all
// roots. Sum of multiplicities equals deg p. Deterministic ordering by
// (re, im) of centers.
std::vector<IsolatedRoot> isolate_complex_roots(const UPoly& p,
                                                double target_radius = 1e-10);

// Recognizes z as an element of p's coefficient tower when it is a rational
// or rational multiple of a basis monomial; verifies p(candidate) == 0.
std::optional<AlgNum> recognize_root(const UPoly& p, cplx z);

} // namespace curvetopo
