#pragma once

#include "curvetopo/series.hpp"
#include "curvetopo/upoly.hpp"

namespace curvetopo {

// Grows a radical tower on demand during branch expansion. All adjunctions
// are pure radicals x^k - v with v in the tower so far; the dimension cap
// bounds runaway growth (beyond it, roots degrade to certified balls).
class TowerBuilder {
public:
  explicit TowerBuilder(TowerPtr start, int max_dim = 64)
      : tw_(std::move(start)), max_dim_(max_dim) {}

  const TowerPtr& tower() const { return tw_; }

  // Exact k-th root of v near hint: first searched inside the current tower
  // (rational multiples of basis monomials), then adjoined as a new radical
  // level. nullopt when the dimension cap blocks adjunction.
  std::optional<AlgNum> kth_root(const AlgNum& v, int k, cplx hint);

  // Exact primitive N-th root of unity for N in {1,2,3,4,6} (adjoining i or
  // sqrt(-3) as needed); nullopt for other N.
  std::optional<AlgNum> unity_root(int N);

  // All roots of p (over the current tower) as (root, multiplicity of root
  // in p); exact where possible (squarefree + recognition + radical
  // adjunction for binomials and quadratics), certified balls otherwise.
  std::vector<std::pair<XNum, int>> all_roots(const UPoly& p);

  int adjoined_levels() const { return adj_; }

private:
  AlgNum lift(const AlgNum& a) const { return a.embedded(tw_); }
  TowerPtr tw_;
  int max_dim_;
  int adj_ = 0;
};

} // namespace curvetopo
