#include "curvetopo/roots.hpp"

#include <algorithm>
#include <cmath>

namespace curvetopo {

namespace {

cplx horner(const std::vector<cplx>& co, cplx z) {
  cplx acc = 0;
  for (size_t i = co.size(); i-- > 0;) acc = acc * z + co[i];
  return acc;
}

cball horner_ball(const std::vector<cball>& co, const cball& z) {
  cball acc(0.0);
  for (size_t i = co.size(); i-- > 0;) acc = acc * z + co[i];
  return acc;
}

std::vector<cball> derivative_ball(const std::vector<cball>& co) {
  std::vector<cball> d;
  for (size_t i = 1; i < co.size(); ++i) d.push_back((double)i * co[i]);
  return d;
}

} // namespace

std::vector<cplx> aberth(const std::vector<cplx>& coeffs0, int max_iter) {
  std::vector<cplx> co = coeffs0;
  while (!co.empty() && std::abs(co.back()) == 0.0) co.pop_back();
  if (co.size() <= 1) return {};
  int n = (int)co.size() - 1;
  double scale = 0;
  for (auto& c : co) scale = std::max(scale, std::abs(c));
  for (auto& c : co) c /= scale;
  // Cauchy-style radius for initial guesses
  double R = 0;
  for (int i = 0; i < n; ++i)
    R = std::max(R, 2.0 * std::pow(std::abs(co[(size_t)i] / co[(size_t)n]),
                                   1.0 / (n - i)));
  if (!(R > 0)) R = 1.0;
  std::vector<cplx> z((size_t)n);
  for (int i = 0; i < n; ++i) {
    double th = 2.0 * M_PI * i / n + 0.4; // avoid real-axis symmetry traps
    z[(size_t)i] = R * cplx(std::cos(th), std::sin(th));
  }
  std::vector<cplx> dco;
  for (size_t i = 1; i < co.size(); ++i) dco.push_back((double)i * co[i]);
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      cplx p = horner(co, z[(size_t)i]);
      cplx dp = horner(dco, z[(size_t)i]);
      if (dp == cplx(0, 0)) {
        z[(size_t)i] += cplx(1e-8, 1e-8);
        worst = 1;
        continue;
      }
      cplx w = p / dp;
      cplx rep = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) rep += 1.0 / (z[(size_t)i] - z[(size_t)j]);
      cplx denom = 1.0 - w * rep;
      cplx corr = denom == cplx(0, 0) ? w : w / denom;
      z[(size_t)i] -= corr;
      worst = std::max(worst,
                       std::abs(corr) / (1.0 + std::abs(z[(size_t)i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

std::optional<std::vector<cball>> certify_roots(
    const std::vector<cball>& coeffs, const std::vector<cplx>& approx) {
  int n = (int)coeffs.size() - 1;
  auto d = derivative_ball(coeffs);
  std::vector<cball> out;
  for (cplx z : approx) {
    cball pz = horner_ball(coeffs, cball(z));
    cball dz = horner_ball(d, cball(z));
    if (dz.contains_zero()) return std::nullopt;
    double r = n * pz.mag_upper() / dz.mag_lower();
    // inflate a touch so the disk is honest under the double ops above
    out.emplace_back(z, r * (1 + 1e-12) + 1e-300);
  }
  return out;
}

std::optional<AlgNum> recognize_root(const UPoly& p, cplx z) {
  const TowerPtr& tw = p.lc().tower();
  // try r * basis_monomial for each basis monomial
  for (int idx = 0; idx < tw->dim(); ++idx) {
    AlgNum mono = AlgNum::basis_monomial(tw, idx);
    cball mb = mono.approx();
    if (mb.contains_zero()) continue;
    cplx ratio = z / mb.c;
    if (std::abs(ratio.imag()) > 1e-7 * (1 + std::abs(ratio.real()))) continue;
    auto q = rat_reconstruct(ratio.real(), 1000000000UL,
                             1e-9 * (1 + std::abs(ratio.real())));
    if (!q) continue;
    AlgNum cand = mono * AlgNum(*q);
    if (p.eval(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

std::vector<IsolatedRoot> isolate_complex_roots(const UPoly& p,
                                                double target_radius) {
  if (p.is_zero()) fail(errc::invalid_input, "root isolation of zero polynomial");
  std::vector<IsolatedRoot> roots;
  auto dec = squarefree_decompose(p);
  for (auto& [factor, mult] : dec) {
    UPoly f = factor;
    // split off roots recognized exactly in the tower
    for (;;) {
      if (f.deg() <= 0) break;
      if (f.deg() == 1) {
        AlgNum r = -f[0] / f[1];
        IsolatedRoot ir;
        ir.disk = r.approx();
        ir.multiplicity = mult;
        ir.exact = r;
        roots.push_back(std::move(ir));
        f = UPoly::constant(AlgNum(1L));
        break;
      }
      std::vector<cplx> co;
      for (int i = 0; i <= f.deg(); ++i) co.push_back(f[i].approx().c);
      auto approx = aberth(co);
      bool split = false;
      for (cplx z : approx) {
        auto ex = recognize_root(f, z);
        if (ex) {
          IsolatedRoot ir;
          ir.disk = ex->approx();
          ir.multiplicity = mult;
          ir.exact = *ex;
          roots.push_back(std::move(ir));
          UPoly lin(std::vector<AlgNum>{-*ex, AlgNum(1L)});
          f = f / lin;
          split = true;
          break;
        }
      }
      if (!split) break;
    }
    if (f.deg() <= 0) continue;
    // numeric isolation of the residual factor
    std::vector<cball> cob;
    std::vector<cplx> co;
    for (int i = 0; i <= f.deg(); ++i) {
      cob.push_back(f[i].approx());
      co.push_back(cob.back().c);
    }
    auto approx = aberth(co);
    // Newton-polish each root to the target
    auto dco = derivative_ball(cob);
    for (auto& z : approx) {
      for (int it = 0; it < 60; ++it) {
        cplx pz = horner_ball(cob, cball(z)).c;
        cplx dz = horner_ball(dco, cball(z)).c;
        if (dz == cplx(0, 0)) break;
        cplx step = pz / dz;
        z -= step;
        if (std::abs(step) < 1e-16 * (1 + std::abs(z))) break;
      }
    }
    auto certs = certify_roots(cob, approx);
    if (!certs)
      fail(errc::resource, "root certification failed (derivative ball hits 0)");
    for (auto& disk : *certs) {
      if (disk.r > target_radius && disk.r > 1e-13 * (1 + std::abs(disk.c)))
        fail(errc::resource, "requested root precision unreachable");
      IsolatedRoot ir;
      ir.disk = disk;
      ir.multiplicity = mult;
      roots.push_back(std::move(ir));
    }
  }
  // pairwise disjointness across everything
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (overlap(roots[i].disk, roots[j].disk))
        fail(errc::resource, "root disks not certifiably disjoint");
  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a,
                                           const IsolatedRoot& b) {
    if (a.disk.c.real() != b.disk.c.real())
      return a.disk.c.real() < b.disk.c.real();
    return a.disk.c.imag() < b.disk.c.imag();
  });
  return roots;
}

} // namespace curvetopo
