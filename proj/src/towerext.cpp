#include "curvetopo/towerext.hpp"

#include "curvetopo/factor.hpp"
#include "curvetopo/roots.hpp"

namespace curvetopo {

std::optional<AlgNum> TowerBuilder::kth_root(const AlgNum& v, int k,
                                             cplx hint) {
  if (v.is_zero()) return AlgNum();
  if (k == 1) return lift(v);
  AlgNum vv = lift(v);
  cball vb = vv.approx();
  cball target = kth_root_near(vb, k, hint);
  // search r * basis monomial in the current tower
  for (int idx = 0; idx < tw_->dim(); ++idx) {
    AlgNum mono = AlgNum::basis_monomial(tw_, idx);
    cball mb = mono.approx();
    if (mb.contains_zero()) continue;
    cplx ratio = target.c / mb.c;
    if (std::abs(ratio.imag()) > 1e-7 * (1 + std::abs(ratio.real()))) continue;
    auto q = rat_reconstruct(ratio.real(), 1000000000UL,
                             1e-9 * (1 + std::abs(ratio.real())));
    if (!q || *q == 0) continue;
    AlgNum cand = mono * AlgNum(*q);
    if (cand.pow(k) == vv) return cand;
  }
  if (tw_->dim() * k > max_dim_) return std::nullopt;
  std::string name = "adj" + std::to_string(++adj_);
  tw_ = tw_->extend(name, k, vv.coords(), target.c);
  return AlgNum::generator(tw_, tw_->num_levels() - 1);
}

std::optional<AlgNum> TowerBuilder::unity_root(int N) {
  switch (N) {
    case 1: return AlgNum(1L);
    case 2: return AlgNum(-1L);
    case 4: {
      auto i = kth_root(AlgNum(-1L), 2, cplx(0, 1));
      return i;
    }
    case 3:
    case 6: {
      auto s = kth_root(AlgNum(-3L), 2, cplx(0, 1.732));
      if (!s) return std::nullopt;
      AlgNum half(rat_of(1, 2));
      if (N == 3) return (AlgNum(-1L) + *s) * half;
      return (AlgNum(1L) + *s) * half;
    }
    default: return std::nullopt;
  }
}

std::vector<std::pair<XNum, int>> TowerBuilder::all_roots(const UPoly& p0) {
  std::vector<std::pair<XNum, int>> out;
  UPoly p = p0;
  {
    // realign coefficients to the current tower
    std::vector<AlgNum> co;
    for (int i = 0; i <= p.deg(); ++i) co.push_back(lift(p[i]));
    p = UPoly(std::move(co));
  }
  auto dec = squarefree_decompose(p);
  for (auto& [factor, mult] : dec) {
    UPoly f = factor;
    for (auto& r : split_tower_roots(f)) out.emplace_back(XNum(lift(r)), mult);
    if (f.deg() <= 0) continue;
    // binomial c^k = v
    bool binomial = true;
    for (int i = 1; i < f.deg(); ++i)
      if (!f[i].is_zero()) { binomial = false; break; }
    if (binomial) {
      AlgNum v = -f[0] / f[f.deg()];
      cball vb = v.approx();
      auto branches = kth_roots(vb, f.deg());
      auto r = kth_root(v, f.deg(), branches[0].c);
      if (r) {
        // one exact representative per conjugacy class; list all roots by
        // twisting with the numeric unity roots so multiplicity bookkeeping
        // stays complete for callers that want every root
        auto zeta = unity_root(f.deg());
        AlgNum rr = lift(*r);
        if (zeta) {
          AlgNum z = lift(*zeta);
          AlgNum acc = rr;
          for (int j = 0; j < f.deg(); ++j) {
            out.emplace_back(XNum(acc), mult);
            acc = acc * z;
          }
        } else {
          for (int j = 0; j < f.deg(); ++j) {
            double th = 2 * M_PI * j / f.deg();
            cball tw = cball(cplx(std::cos(th), std::sin(th)),
                             4 * detail::kEps);
            if (j == 0)
              out.emplace_back(XNum(rr), mult);
            else
              out.emplace_back(XNum(rr.approx() * tw), mult);
          }
        }
        continue;
      }
    }
    if (f.deg() == 2) {
      // complete the square: roots -b/2a +- sqrt(b^2/4a^2 - c/a)
      AlgNum a = f[2], b = f[1], c = f[0];
      AlgNum shift = -b / (AlgNum(2L) * a);
      AlgNum disc = shift * shift - c / a;
      cball db = disc.approx();
      if (db.nonzero() || disc.is_zero()) {
        auto branches = kth_roots(db, 2);
        auto s = disc.is_zero() ? std::optional<AlgNum>(AlgNum())
                                : kth_root(disc, 2, branches[0].c);
        if (s) {
          AlgNum sh = lift(shift), sq = lift(*s);
          out.emplace_back(XNum(sh + sq), mult);
          out.emplace_back(XNum(sh - sq), mult);
          continue;
        }
      }
    }
    // certified numeric fallback
    auto roots = isolate_complex_roots(f, 1e-11);
    for (auto& r : roots) out.emplace_back(XNum(r.disk), mult);
  }
  return out;
}

} // namespace curvetopo
