#include "curvetopo/dual.hpp"

#include <algorithm>
#include <random>

namespace curvetopo {

DualBranch dual_branch(const PuiseuxBranch& source0, TowerBuilder& tb) {
  PuiseuxBranch source = standard_form(source0, tb);
  if (source.series.known_zero())
    fail(errc::invalid_input, "dual of a line germ is a point");
  int N = source.ram;
  int S = *source.series.valuation();
  if (S <= N)
    fail(errc::invalid_input,
         "dual branch needs a tangential standard parametrization (S > N)");
  DualBranch out;
  // u = -phi'(t) / (N t^{N-1}), w = (t^N phi'(t) - N t^{N-1} phi(t)) / (N t^{N-1});
  // germ classification only needs a modest series order
  int cap = std::min(source.series.trunc() - N, 72 + 2 * N);
  PSeries u(cap), w(cap + N);
  for (auto& [e, c] : source.series.terms()) {
    XNum ratio = c * XNum(AlgNum(Rat(e, N)));
    u.add_term(e - N, -ratio);
    w.add_term(e, c * XNum(AlgNum(Rat(e - N, N))));
  }
  out.u_series = u;
  out.w_series = w;
  // val u = (s-1) N
  int valu = *u.valuation();
  if (valu != S - N)
    fail(errc::undecidable, "dual valuation differs from (s-1)N");
  PSeries t = power_reparam(u, tb);
  PSeries psi = w.compose(t);
  PuiseuxBranch d;
  d.vars = {"u", "w"};
  d.base_point = {AlgNum(), AlgNum()};
  d.param_var = 0;
  d.dep_var = 1;
  d.ram = valu;
  d.series = psi;
  d.tower = tb.tower();
  out.dual = d;
  out.dual_invariants = puiseux_invariants(d);
  return out;
}

DualGermReport dual_singularity_type(const SingularityReport& rep,
                                     TowerBuilder& tb) {
  DualGermReport out;
  // express every branch in the standard frame of the common tangent
  std::vector<PuiseuxBranch> oriented;
  for (auto& b : rep.branches) {
    PuiseuxBranch s = standard_form(b, tb);
    oriented.push_back(std::move(s));
  }
  int common_param = oriented.empty() ? 0 : oriented[0].param_var;
  for (auto& b : oriented)
    if (b.param_var != common_param)
      fail(errc::invalid_input,
           "dual germ needs a common tangent-cone orientation");
  for (auto& b : oriented) out.branches.push_back(dual_branch(b, tb));
  int r = (int)out.branches.size();
  out.intersections.assign((size_t)r, std::vector<int>((size_t)r, 0));
  GermData germ;
  for (auto& db : out.branches) {
    germ.inv.push_back(db.dual_invariants);
    const auto& inv = germ.inv.back();
    if (inv.S > inv.N) {
      germ.tangent_kind.push_back(0);
      germ.tangent_slope.emplace_back(AlgNum());
    } else if (inv.S < inv.N) {
      germ.tangent_kind.push_back(1);
      germ.tangent_slope.emplace_back(AlgNum());
    } else {
      germ.tangent_kind.push_back(2);
      germ.tangent_slope.push_back(db.dual.series.coeff(inv.S));
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int v = intersection_number(out.branches[(size_t)i].dual,
                                  out.branches[(size_t)j].dual, tb);
      out.intersections[(size_t)i][(size_t)j] = v;
      out.intersections[(size_t)j][(size_t)i] = v;
    }
  germ.inter = out.intersections;
  out.label = taxonomy_label(germ, &out.aliases);
  return out;
}

int dual_degree(const MultiPoly& f, unsigned long seed) {
  if (f.is_zero() || f.vars().size() != 2)
    fail(errc::invalid_input, "dual_degree expects a plane curve");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-23, 23), den(1, 5);
  auto singulars = find_singular_points(f);
  int xv = 0, yv = 1;
  MultiPoly fx = f.derivative(xv), fy = f.derivative(yv);
  auto run_probe = [&](Rat p, Rat q) -> int {
    MultiPoly px =
        MultiPoly::constant(f.vars(), AlgNum(p)) - MultiPoly::variable(f.vars(), xv);
    MultiPoly py =
        MultiPoly::constant(f.vars(), AlgNum(q)) - MultiPoly::variable(f.vars(), yv);
    MultiPoly g = px * fx + py * fy;
    MultiPoly R = resultant_elim(f, g, f.vars()[(size_t)xv]);
    if (R.is_zero()) return -1;
    UPoly S = squarefree_part(R.to_upoly(yv));
    // remove singular-point levels
    std::vector<AlgNum> used;
    for (auto& sp : singulars) {
      if (sp.at_infinity) continue;
      if (!sp.exact) return -2; // box singulars unsupported here
      const AlgNum& y0 = sp.coords[1];
      bool seen = false;
      for (auto& u : used)
        if (u == y0) seen = true;
      if (seen) continue;
      used.push_back(y0);
      UPoly lin(std::vector<AlgNum>{-y0.embedded(S.lc().tower()),
                                    AlgNum(1L).embedded(S.lc().tower())});
      UPoly qq, rr;
      UPoly::divrem(S, lin, qq, rr);
      if (rr.is_zero()) S = qq;
    }
    return S.deg();
  };
  int last = -1;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rat p = rat_of(num(rng), den(rng));
    Rat q = rat_of(num(rng), den(rng));
    int n = run_probe(p, q);
    if (n < 0) continue;
    if (last == n) return n;
    last = n;
  }
  fail(errc::degenerate, "dual_degree: probe points kept disagreeing");
}

} // namespace curvetopo
