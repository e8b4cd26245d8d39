#pragma once

#include <optional>

#include "curvetopo/braid.hpp"
#include "curvetopo/presentation.hpp"
#include "curvetopo/multipoly.hpp"
#include "curvetopo/roots.hpp"

namespace curvetopo {

// Zariski pencil data: pencil coordinate, base value, critical values, and
// one lasso plan (path + circle) per critical value. Loops are pairwise
// non-crossing and, composed in order, homotopic to the big circle.
struct PencilSetup {
  int pencil_var = 1;
  int fiber_var = 0;
  Rat base;
  std::vector<IsolatedRoot> critical;
  struct Loop {
    std::vector<cplx> path; // from the base value to the circle entry point
    cplx center;
    double radius = 0;
  };
  std::vector<Loop> loops;
  double big_radius = 0;
};

// Roots of the discriminant in the pencil variable, with multiplicities.
// Requires the fiber-direction leading coefficient to be constant.
std::vector<IsolatedRoot> critical_pencil_values(const MultiPoly& f,
                                                 int pencil_var);

// Builds the lasso plan. base_hint fixes the base value exactly; otherwise
// sign * (smallest nonzero |critical|)/2 is used.
PencilSetup plan_pencil(const MultiPoly& f, int pencil_var,
                        std::optional<Rat> base_hint = std::nullopt,
                        int sign = +1);

// Certified strand paths over one loop (or over the big circle when
// loop_index == -1): at every accepted step the enclosing disks are pairwise
// disjoint and strand motion stays below a quarter of the minimal
// separation, so strand identity and crossing order are certain.
struct FiberTrace {
  std::vector<cplx> params;
  std::vector<std::vector<cball>> strands;
  std::vector<int> permutation; // strand s returns to start slot permutation[s]
};

FiberTrace track_fiber(const MultiPoly& f, const PencilSetup& setup,
                       int loop_index);

// line-oriented dump: "loop <k> param <re> <im> strand <re> <im> <rad> ..."
std::string trace_dump(const FiberTrace& trace, int loop_index);

// Braid word of a trace under the projection direction theta; degenerate
// projections raise errors so the driver can rotate theta.
BraidWord braid_word(const FiberTrace& trace, double theta);

// Van Kampen presentation from the monodromy braids: relations g = g^sigma
// per braid, big-circle relation g_d ... g_2 g_1 appended in projective mode.
GroupPresentation van_kampen(const std::vector<BraidWord>& braids, int strands,
                             bool projective);

struct MonodromyResult {
  PencilSetup setup;
  std::vector<FiberTrace> traces;
  std::vector<BraidWord> braids; // one per critical value, plan order
  BraidWord big_circle;          // independently tracked |eta| = R loop
  double theta = 0;              // projection that succeeded
  GroupPresentation affine, projective;
};

// Full pipeline: plan, track every loop and the big circle, extract braids
// with one common projection, assemble both presentations.
MonodromyResult braid_monodromy(const MultiPoly& f, int pencil_var,
                                std::optional<Rat> base_hint = std::nullopt,
                                int sign = +1);

// product of the loop braids equals the big-circle braid in permutation and
// exponent sum (the certified part of the conjugacy statement)
bool big_circle_consistent(const MonodromyResult& r);

} // namespace curvetopo
