#include "curvetopo/factor.hpp"

namespace curvetopo {

std::vector<AlgNum> split_tower_roots(UPoly& f) {
  std::vector<AlgNum> out;
  for (;;) {
    if (f.deg() <= 0) return out;
    if (f.deg() == 1) {
      out.push_back(-f[0] / f[1]);
      f = UPoly::constant(AlgNum(1L));
      return out;
    }
    std::vector<cplx> co;
    for (int i = 0; i <= f.deg(); ++i) co.push_back(f[i].approx().c);
    auto approx = aberth(co);
    bool split = false;
    for (cplx z : approx) {
      auto ex = recognize_root(f, z);
      if (ex) {
        out.push_back(*ex);
        f = f / UPoly(std::vector<AlgNum>{-*ex, AlgNum(1L)});
        split = true;
        break;
      }
    }
    if (!split) return out;
  }
}

std::vector<SquarefreeFactor> squarefree_factor(const MultiPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "squarefree_factor of zero");
  int var = -1;
  for (size_t i = 0; i < p.vars().size(); ++i)
    if (p.degree((int)i) > 0) {
      if (var >= 0)
        fail(errc::invalid_input, "squarefree_factor needs a univariate input");
      var = (int)i;
    }
  std::vector<SquarefreeFactor> out;
  if (var < 0) return out; // constant
  auto dec = squarefree_decompose(p.to_upoly(var));
  for (auto& [factor, mult] : dec) {
    UPoly f = factor;
    auto roots = split_tower_roots(f);
    for (auto& r : roots) {
      UPoly lin(std::vector<AlgNum>{-r, AlgNum(1L)});
      out.push_back({MultiPoly::from_upoly(lin, p.vars(), var), mult});
    }
    if (f.deg() > 0)
      out.push_back({MultiPoly::from_upoly(f, p.vars(), var), mult});
  }
  return out;
}

} // namespace curvetopo
