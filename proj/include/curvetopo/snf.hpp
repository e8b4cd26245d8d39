#pragma once

#include <vector>

#include "curvetopo/rat.hpp"

namespace curvetopo {

using IMat = std::vector<std::vector<Int>>; // row-major

// Smith normal form over Z. Returns the diagonal entries d_1 | d_2 | ...
// (nonnegative, zeros trailing). When col_ops is non-null it receives the
// accumulated right transform V (cols(A) x cols(A)) with A*V ~ column moves,
// i.e. for x the original column coordinates, x*V gives coordinates in the
// new basis... concretely: if A' = U A V is the SNF, then the class of the
// j-th standard generator in coker(A^T ...) is read off via V as documented
// at the call sites.
std::vector<Int> smith_normal_form(IMat a, IMat* col_ops = nullptr);

// Cokernel of the column-span: Z^cols / rowspace(A) given A's rows as
// relations among cols generators. free_rank plus invariant factors > 1,
// and per-generator images in the torsion/free coordinates when asked.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion; // invariant factors > 1, divisibility chain
  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// relations: each row is a relation vector over n generators
AbelianGroup cokernel(const IMat& relations, int n);

// Also expresses each generator's class: coordinates in the decomposition
// Z^free_rank + sum Z/d_i. Column k of gen_classes = class of generator k;
// rows list torsion coordinates first (mod d_i), then free coordinates.
AbelianGroup cokernel_with_classes(const IMat& relations, int n,
                                   std::vector<std::vector<Int>>* gen_classes);

} // namespace curvetopo
