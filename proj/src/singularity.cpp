#include "curvetopo/singularity.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace curvetopo {

namespace {

MultiPoly homogenize(const MultiPoly& f, const std::string& zname) {
  int d = f.total_degree();
  std::vector<std::string> vars = f.vars();
  vars.push_back(zname);
  std::map<std::vector<int>, AlgNum> terms;
  for (auto& [e, c] : f.terms()) {
    std::vector<int> e2 = e;
    int s = 0;
    for (int x : e) s += x;
    e2.push_back(d - s);
    terms[e2] = c;
  }
  return MultiPoly(vars, terms);
}

// roots of a univariate gcd of several polynomials over the tower
UPoly multi_gcd(std::vector<UPoly> ps) {
  UPoly g;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
  }
  return g;
}

} // namespace

std::vector<SingularPoint> find_singular_points(const MultiPoly& f) {
  if (f.is_zero() || f.vars().size() != 2)
    fail(errc::invalid_input, "find_singular_points expects a plane curve");
  int xv = 0, yv = 1;
  MultiPoly fx = f.derivative(xv), fy = f.derivative(yv);
  std::vector<SingularPoint> out;
  if (f.degree(xv) >= 1) {
    MultiPoly res = resultant_elim(f, fx, f.vars()[(size_t)xv]);
    if (res.is_zero())
      fail(errc::invalid_input, "non-reduced curve (vanishing discriminant)");
    auto factors = squarefree_factor(res);
    for (auto& sf : factors) {
      UPoly fac = sf.factor.to_upoly(yv);
      if (fac.deg() == 1) {
        AlgNum y0 = -fac[0] / fac[1];
        UPoly gx = multi_gcd({f.substitute(yv, y0).to_upoly(xv),
                              fx.substitute(yv, y0).to_upoly(xv),
                              fy.substitute(yv, y0).to_upoly(xv)});
        if (gx.deg() < 1) continue;
        UPoly residual = squarefree_part(gx);
        for (auto& x0 : split_tower_roots(residual)) {
          SingularPoint p;
          p.coords = {x0, y0};
          p.box = {x0.approx(), y0.approx()};
          out.push_back(std::move(p));
        }
        if (residual.deg() > 0) {
          for (auto& r : isolate_complex_roots(residual)) {
            SingularPoint p;
            p.exact = false;
            p.coords = {AlgNum(), y0};
            p.box = {r.disk, y0.approx()};
            out.push_back(std::move(p));
          }
        }
      } else if (sf.multiplicity > 1) {
        // non-tower critical value with multiplicity: check for a singular
        // point numerically (certified boxes; exactness unavailable)
        for (auto& r : isolate_complex_roots(fac)) {
          std::vector<cball> pty = {cball(0.0), r.disk};
          UPoly fr, fxr, fyr;
          // coefficient-wise ball substitution for y
          auto subst = [&](const MultiPoly& g) {
            auto cs = g.coeffs_in(xv);
            std::vector<cball> co;
            for (auto& c : cs) {
              cball acc(0.0);
              // c is a polynomial in y only
              acc = c.eval_ball({cball(0.0), r.disk});
              co.push_back(acc);
            }
            return co;
          };
          auto fco = subst(f);
          auto fxco = subst(fx);
          auto fyco = subst(fy);
          auto approx = aberth(std::vector<cplx>(fco.size(), cplx()));
          (void)approx;
          // locate common roots of (f, fx) crudely: roots of f ball-close to
          // roots of fx where fy also vanishes within its ball
          std::vector<cplx> cf, cfx;
          for (auto& b : fco) cf.push_back(b.c);
          for (auto& b : fxco) cfx.push_back(b.c);
          auto rf = aberth(cf);
          auto rfx = aberth(cfx);
          for (auto& z : rf) {
            for (auto& w : rfx) {
              if (std::abs(z - w) > 1e-6) continue;
              cball fyv(0.0);
              for (size_t i = fyco.size(); i-- > 0;)
                fyv = fyv * cball(z) + fyco[i];
              if (!fyv.contains_zero()) continue;
              SingularPoint p;
              p.exact = false;
              p.coords = {AlgNum(), AlgNum()};
              p.box = {cball(z, 1e-6), r.disk};
              out.push_back(std::move(p));
            }
          }
        }
      }
    }
  }
  // line at infinity
  MultiPoly F = homogenize(f, "_z");
  int X = 0, Y = 1, Z = 2;
  auto at_inf = [&](const MultiPoly& g) {
    // substitute Z = 0, Y = 1 -> univariate in X
    return g.substitute(Z, AlgNum()).substitute(Y, AlgNum(1L)).to_upoly(X);
  };
  MultiPoly FX = F.derivative(X), FY = F.derivative(Y), FZ = F.derivative(Z);
  UPoly g = multi_gcd({at_inf(F), at_inf(FX), at_inf(FY), at_inf(FZ)});
  if (g.deg() >= 1) g = squarefree_part(g);
  if (g.deg() >= 1) {
    UPoly residual = g;
    for (auto& x0 : split_tower_roots(residual)) {
      SingularPoint p;
      p.at_infinity = true;
      p.coords = {x0, AlgNum(1L)};
      p.box = {x0.approx(), cball(1.0)};
      out.push_back(std::move(p));
    }
    if (residual.deg() > 0)
      for (auto& r : isolate_complex_roots(residual)) {
        SingularPoint p;
        p.at_infinity = true;
        p.exact = false;
        p.coords = {AlgNum(), AlgNum(1L)};
        p.box = {r.disk, cball(1.0)};
        out.push_back(std::move(p));
      }
  }
  {
    // the point (1:0:0)
    std::vector<AlgNum> pt = {AlgNum(1L), AlgNum(), AlgNum()};
    if (F.eval(pt).is_zero() && FX.eval(pt).is_zero() &&
        FY.eval(pt).is_zero() && FZ.eval(pt).is_zero()) {
      SingularPoint p;
      p.at_infinity = true;
      p.coords = {AlgNum(1L), AlgNum()};
      p.box = {cball(1.0), cball(0.0)};
      out.push_back(std::move(p));
    }
  }
  // local multiplicities for exact affine points
  for (auto& p : out) {
    if (!p.exact || p.at_infinity) continue;
    std::vector<MultiPoly> repl;
    for (int i = 0; i < 2; ++i)
      repl.push_back(MultiPoly::variable(f.vars(), i) +
                     MultiPoly::constant(f.vars(), p.coords[(size_t)i]));
    MultiPoly sh = f.compose(repl);
    int m = INT_MAX;
    for (auto& [e, c] : sh.terms()) m = std::min(m, e[0] + e[1]);
    p.multiplicity = m;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// conjugate series of a branch scaled into a common root u = param^(1/M):
// list of (exponent in u, coefficient) per conjugate index
struct ConjSeries {
  std::vector<std::map<int, XNum>> conj;
  int trunc_u = 0;
};

ConjSeries conjugates(const PuiseuxBranch& b, int M, TowerBuilder& tb) {
  int scale = M / b.ram;
  ConjSeries out;
  XNum zeta;
  auto ez = tb.unity_root(b.ram);
  if (ez)
    zeta = XNum(*ez);
  else
    zeta = XNum(cball(std::exp(cplx(0, 2 * M_PI / b.ram)), 4e-16));
  long long tu = (long long)b.series.trunc() * scale;
  out.trunc_u = tu > (1 << 28) ? (1 << 28) : (int)tu;
  for (int j = 0; j < b.ram; ++j) {
    std::map<int, XNum> s;
    XNum zj = xnum_pow(zeta, j);
    for (auto& [e, c] : b.series.terms()) s[e * scale] = c * xnum_pow(zj, e);
    out.conj.push_back(std::move(s));
  }
  return out;
}

} // namespace

int intersection_number(const PuiseuxBranch& a, const PuiseuxBranch& b,
                        TowerBuilder& tb) {
  if (a.base_point != b.base_point)
    fail(errc::invalid_input, "branches at different points");
  if (a.param_var != b.param_var) {
    // one of the two is an axis germ recorded in the swapped orientation:
    // its defining function is the other's parameter coordinate
    if (a.series.known_zero()) return b.ram;
    if (b.series.known_zero()) return a.ram;
    fail(errc::invalid_input, "mixed orientations need an axis branch");
  }
  int M = std::lcm(a.ram, b.ram);
  ConjSeries ca = conjugates(a, M, tb);
  ConjSeries cb = conjugates(b, M, tb);
  long total = 0;
  int tr = std::min(ca.trunc_u, cb.trunc_u);
  for (auto& sa : ca.conj)
    for (auto& sb : cb.conj) {
      // valuation of sa - sb
      std::map<int, XNum> diff;
      for (auto& [e, c] : sa) {
        auto it = diff.find(e);
        if (it == diff.end())
          diff[e] = c;
        else
          it->second = it->second + c;
      }
      for (auto& [e, c] : sb) {
        auto it = diff.find(e);
        if (it == diff.end())
          diff[e] = -c;
        else
          it->second = it->second - c;
      }
      int val = -1;
      for (auto& [e, c] : diff) {
        if (e >= tr) break;
        if (c.known_zero()) continue;
        if (c.known_nonzero()) { val = e; break; }
        fail(errc::undecidable,
             "ambiguous coefficient while comparing branches");
      }
      if (val < 0)
        fail(errc::undecidable,
             "insufficient truncation for intersection number");
      total += val;
    }
  if (total % M != 0)
    fail(errc::undecidable, "non-integral intersection valuation");
  return (int)(total / M);
}

long branch_milnor(const BranchInvariants& inv) {
  long mu = 0;
  int prev = inv.N;
  for (size_t i = 0; i < inv.chain.P.size(); ++i) {
    mu += (long)(inv.chain.P[i] - 1) * (prev - inv.chain.D[i]);
    prev = inv.chain.D[i];
  }
  return mu;
}

namespace {

bool same_tangent(const GermData& g, int a, int b) {
  if (g.tangent_kind[(size_t)a] != g.tangent_kind[(size_t)b]) return false;
  if (g.tangent_kind[(size_t)a] != 2) return true;
  XNum d = g.tangent_slope[(size_t)a] - g.tangent_slope[(size_t)b];
  if (d.known_zero()) return true;
  if (d.known_nonzero()) return false;
  fail(errc::undecidable, "tangent comparison undecidable");
}

} // namespace

SingularityReport classify_singularity(const MultiPoly& f,
                                       const std::vector<AlgNum>& point,
                                       TowerBuilder& tb) {
  SingularityReport rep;
  rep.location = point;
  rep.branches = newton_puiseux(f, point, /*param=*/0, tb);
  int r = (int)rep.branches.size();
  GermData germ;
  for (auto& b : rep.branches) {
    PuiseuxBranch sf = standard_form(b, tb);
    BranchInvariants inv = puiseux_invariants(sf);
    // tangent bookkeeping happens in the common y-over-x frame
    if (b.param_var != 0 || b.series.known_zero()) {
      // swapped germ: the x = const line (kind 1); dep-axis germ: y = 0
      germ.tangent_kind.push_back(b.param_var != 0 ? 1 : 0);
      germ.tangent_slope.emplace_back(AlgNum());
    } else {
      BranchInvariants common = puiseux_invariants(b);
      if (common.S > common.N) {
        germ.tangent_kind.push_back(0);
        germ.tangent_slope.emplace_back(AlgNum());
      } else if (common.S < common.N) {
        germ.tangent_kind.push_back(1);
        germ.tangent_slope.emplace_back(AlgNum());
      } else {
        germ.tangent_kind.push_back(2);
        germ.tangent_slope.push_back(b.series.coeff(common.S));
      }
    }
    rep.invariants.push_back(std::move(inv));
  }
  germ.inv = rep.invariants;
  rep.intersections.assign((size_t)r, std::vector<int>((size_t)r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int v = intersection_number(rep.branches[(size_t)i],
                                  rep.branches[(size_t)j], tb);
      rep.intersections[(size_t)i][(size_t)j] = v;
      rep.intersections[(size_t)j][(size_t)i] = v;
    }
  // multiplicity: sum over branches of min(ram, valuation)
  int m = 0;
  for (int i = 0; i < r; ++i) {
    const auto& b = rep.branches[(size_t)i];
    if (b.series.known_zero()) {
      m += 1;
    } else {
      auto v = b.series.valuation();
      m += std::min(b.ram, *v);
    }
  }
  rep.multiplicity = m;
  long mu = 0;
  for (auto& inv : rep.invariants) mu += branch_milnor(inv);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      mu += 2L * rep.intersections[(size_t)i][(size_t)j];
  mu -= r - 1;
  rep.milnor = mu;
  rep.tower = tb.tower();

  germ.inter = rep.intersections;
  rep.label = taxonomy_label(germ, &rep.aliases);
  return rep;
}

std::string taxonomy_label(const GermData& g,
                           std::vector<std::string>* aliases) {
  int r = (int)g.inv.size();
  auto& I = g.inter;
  auto pairs_of = [&](int i) { return g.inv[(size_t)i].pairs; };
  auto smooth = [&](int i) { return pairs_of(i).empty(); };
  std::string label = "unrecognized";
  if (r == 1) {
    auto P = pairs_of(0);
    if (P.empty()) {
      label = "smooth";
    } else if (P == std::vector<std::pair<int, int>>{{3, 2}, {9, 2}}) {
      label = "Sp1";
    } else if (P.size() == 1 && P[0].second == 2) {
      label = "A" + std::to_string(P[0].first - 1);
      if (aliases)
        aliases->push_back("B(2," + std::to_string(P[0].first) + ")");
    } else if (P.size() == 1) {
      if (P[0] == std::pair<int, int>(4, 3)) {
        label = "E6";
        if (aliases) aliases->push_back("B(3,4)");
      } else {
        label = "B(" + std::to_string(P[0].second) + "," +
                std::to_string(P[0].first) + ")";
      }
    }
    return label;
  }
  bool all_same_tangent = true;
  for (int i = 0; i < r && all_same_tangent; ++i)
    for (int j = i + 1; j < r && all_same_tangent; ++j)
      if (!same_tangent(g, i, j)) all_same_tangent = false;
  if (r == 2 && smooth(0) && smooth(1)) {
    // same tangent: tangential A_{2k-1}; transverse: I = 1 gives the node
    return "A" + std::to_string(2 * I[0][1] - 1);
  }
  if (all_same_tangent) {
    if (r == 2 && (smooth(0) || smooth(1))) {
      int k = smooth(0) ? 1 : 0;
      auto P = pairs_of(k);
      if (P.size() == 1 && P[0].second == 2 && P[0].first >= 5 &&
          P[0].first % 2 == 1 && I[0][1] == 4)
        label = "C(3," + std::to_string(P[0].first + 2) + ")";
      return label;
    }
    if (r == 2 && pairs_of(0) == pairs_of(1) && pairs_of(0).size() == 1) {
      auto [q1, p1] = pairs_of(0)[0]; // branch pair (m, n) = (q', p')
      if (I[0][1] == q1 * p1)
        label = "B(" + std::to_string(2 * p1) + "," +
                std::to_string(2 * q1) + ")";
      return label;
    }
    if (r == 3 && smooth(0) && smooth(1) && smooth(2)) {
      std::vector<int> is = {I[0][1], I[0][2], I[1][2]};
      std::sort(is.begin(), is.end());
      if (is[0] == is[2]) {
        label = "B(3," + std::to_string(3 * is[0]) + ")";
      } else if (is[0] == 2 && is[1] == 2 && is[2] >= 2) {
        label = "C(3," + std::to_string(2 * (is[2] + 1)) + ")";
      }
      return label;
    }
    return label;
  }
  // several tangent cones: try the two-group decomposition into B(2,k) parts
  std::vector<int> group((size_t)r, -1);
  int ngroups = 0;
  for (int i = 0; i < r; ++i) {
    if (group[(size_t)i] >= 0) continue;
    group[(size_t)i] = ngroups;
    for (int j = i + 1; j < r; ++j)
      if (group[(size_t)j] < 0 && same_tangent(g, i, j))
        group[(size_t)j] = ngroups;
    ++ngroups;
  }
  if (ngroups != 2) return label;
  auto group_k = [&](int gindex) -> int {
    std::vector<int> mem;
    for (int i = 0; i < r; ++i)
      if (group[(size_t)i] == gindex) mem.push_back(i);
    if (mem.size() == 1) {
      auto P = pairs_of(mem[0]);
      if (P.size() == 1 && P[0].second == 2) return P[0].first;
      return -1;
    }
    if (mem.size() == 2 && smooth(mem[0]) && smooth(mem[1]))
      return 2 * I[(size_t)mem[0]][(size_t)mem[1]];
    return -1;
  };
  int kA = group_k(0), kB = group_k(1);
  if (kA >= 4 && kB >= 4) {
    int p = std::min(kA, kB) + 2, q = std::max(kA, kB) + 2;
    label = "C(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return label;
}

long discriminant_defect(const MultiPoly& f, const SingularityReport& rep,
                         int param_var) {
  int dep = 1 - param_var;
  MultiPoly line = f.substitute(param_var, rep.location[(size_t)param_var]);
  UPoly g = line.to_upoly(dep);
  UPoly sh = g.shifted(rep.location[(size_t)dep]);
  int val = 0;
  while (val <= sh.deg() && sh[val].is_zero()) ++val;
  return rep.milnor + val - 1;
}

BraidWord local_braid(const MultiPoly& f, const SingularityReport& rep,
                      int pencil_var, double radius) {
  TowerBuilder tb(rep.tower);
  std::vector<PuiseuxBranch> oriented;
  for (auto& b : rep.branches) {
    if (b.param_var == pencil_var) {
      oriented.push_back(b);
    } else if (b.series.known_zero()) {
      fail(errc::invalid_input,
           "pencil line is a branch of the curve at this point");
    } else {
      oriented.push_back(invert_parametrization(b, tb));
    }
  }
  // sample strand trajectories over eta = radius * e^{2 pi i s}
  int strands = 0;
  for (auto& b : oriented) strands += b.ram;
  int steps = 256;
  for (int attempt = 0; attempt < 6; ++attempt, steps *= 2) {
    std::vector<std::vector<cball>> paths((size_t)strands);
    for (auto& p : paths) p.reserve((size_t)steps + 1);
    for (int k = 0; k <= steps; ++k) {
      double s = (double)k / steps;
      int idx = 0;
      for (auto& b : oriented) {
        double rN = std::pow(radius, 1.0 / b.ram);
        for (int j = 0; j < b.ram; ++j) {
          double th = 2 * M_PI * (s + j) / b.ram;
          cball t(rN * std::exp(cplx(0, th)), 1e-15);
          paths[(size_t)idx + (size_t)j].push_back(b.series.eval_ball(t));
        }
        idx += b.ram;
      }
    }
    try {
      return braid_from_paths(paths, 0.013);
    } catch (const error& e) {
      if (e.kind() != errc::degenerate || attempt == 5) throw;
    }
  }
  fail(errc::resource, "local braid sampling failed");
}

} // namespace curvetopo
