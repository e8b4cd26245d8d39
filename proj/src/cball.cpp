#include "curvetopo/cball.hpp"

namespace curvetopo {

std::vector<cball> kth_roots(const cball& a, int k) {
  if (k <= 0) fail(errc::invalid_input, "kth_roots: k must be positive");
  if (a.contains_zero() && !(a.c == cplx(0, 0) && a.r == 0))
    fail(errc::undecidable, "kth_roots: ball contains zero");
  std::vector<cball> out;
  if (a.c == cplx(0, 0)) {
    out.assign(k, cball(0.0));
    return out;
  }
  double mod = std::pow(std::abs(a.c), 1.0 / k);
  double arg = std::arg(a.c) / k;
  // |z^{1/k}| relative error <= (1/k) * relative width of a, padded
  double rel = a.r / a.mag_lower();
  double rad = mod * (rel / k + 64 * detail::kEps);
  for (int j = 0; j < k; ++j) {
    double th = arg + 2.0 * M_PI * j / k;
    out.emplace_back(cplx(mod * std::cos(th), mod * std::sin(th)), rad);
  }
  return out;
}

cball kth_root_near(const cball& a, int k, cplx hint) {
  auto roots = kth_roots(a, k);
  int best = 0;
  double bd = 1e300;
  for (int j = 0; j < (int)roots.size(); ++j) {
    double d = std::abs(roots[j].c - hint);
    if (d < bd) { bd = d; best = j; }
  }
  // the hint must separate the chosen branch from the others
  for (int j = 0; j < (int)roots.size(); ++j) {
    if (j == best) continue;
    if (std::abs(roots[j].c - hint) <= bd + roots[j].r + roots[best].r)
      fail(errc::undecidable, "kth_root_near: ambiguous branch hint");
  }
  return roots[best];
}

} // namespace curvetopo
