#include "curvetopo/puiseux.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>

namespace curvetopo {

namespace {

using Key = std::pair<int, int>; // (dep exponent, param exponent)
using XPoly = std::map<Key, XNum>;

XNum xp_get(const XPoly& f, Key k) {
  auto it = f.find(k);
  return it == f.end() ? XNum(AlgNum()) : it->second;
}

void xp_add(XPoly& f, Key k, const XNum& c) {
  if (c.known_zero()) return;
  auto it = f.find(k);
  if (it == f.end()) {
    f.emplace(k, c);
  } else {
    XNum s = it->second + c;
    if (s.known_zero())
      f.erase(it);
    else
      it->second = s;
  }
}

// f(s, Y(s)) truncated; Y must carry trunc >= T
PSeries xp_eval(const XPoly& f, const PSeries& Y, int T) {
  int maxdep = 0;
  for (auto& [k, c] : f) maxdep = std::max(maxdep, k.first);
  std::vector<PSeries> pw;
  pw.reserve((size_t)maxdep + 1);
  PSeries one(1 << 28);
  one.add_term(0, XNum(AlgNum(1L)));
  pw.push_back(one);
  for (int i = 1; i <= maxdep; ++i) pw.push_back(pw.back() * Y);
  PSeries acc(T);
  for (auto& [k, c] : f) {
    PSeries t = pw[(size_t)k.first].shifted(k.second).scaled(c);
    acc = acc + t;
  }
  acc.set_trunc(std::min(acc.trunc(), T));
  return acc;
}

XPoly xp_dep_derivative(const XPoly& f) {
  XPoly out;
  for (auto& [k, c] : f) {
    if (k.first == 0) continue;
    xp_add(out, {k.first - 1, k.second}, c * XNum(AlgNum((long)k.first)));
  }
  return out;
}

// regular lifting: f(0,0)=0, f_dep(0,0) nonzero; returns dep(s) to order T
PSeries lift_regular(const XPoly& f, int T) {
  XPoly fy = xp_dep_derivative(f);
  PSeries y(1);
  int prec = 1;
  while (prec < T) {
    prec = std::min(2 * prec, T);
    PSeries ycur = y;
    ycur.set_trunc(prec);
    PSeries fv = xp_eval(f, ycur, prec);
    PSeries dv = xp_eval(fy, ycur, prec);
    PSeries corr = fv * dv.inverse();
    corr.set_trunc(prec);
    y = ycur - corr;
    y.set_trunc(prec);
  }
  return y;
}

struct Face {
  int p = 1, q = 1; // slope mu = q/p, gcd(p,q)=1
  int imin = 0;
  UPoly Q;               // exact face polynomial in u = c^p (when exact)
  std::vector<XNum> Qx;  // fallback coefficients when not exact
  bool exact = true;
};

std::vector<Face> newton_faces(const XPoly& f, const TowerPtr& tw) {
  std::vector<Key> pts;
  std::vector<Key> amb;
  for (auto& [k, c] : f) {
    if (c.known_nonzero())
      pts.push_back(k);
    else if (c.ambiguous())
      amb.push_back(k);
  }
  std::set<std::pair<int, int>> slopes;
  for (auto& a : pts)
    for (auto& b : pts) {
      if (a.first <= b.first || a.second >= b.second) continue;
      int dp = a.first - b.first;  // i1 - i2 > 0
      int dq = b.second - a.second; // j2 - j1 > 0
      int g = std::gcd(dp, dq);
      slopes.insert({dp / g, dq / g});
    }
  std::vector<Face> out;
  for (auto& [p, q] : slopes) {
    long w = LONG_MAX;
    for (auto& k : pts) w = std::min(w, (long)q * k.first + (long)p * k.second);
    for (auto& k : amb)
      if ((long)q * k.first + (long)p * k.second <= w)
        fail(errc::undecidable,
             "ambiguous coefficient on a Newton polygon face");
    std::vector<Key> face;
    for (auto& k : pts)
      if ((long)q * k.first + (long)p * k.second == w) face.push_back(k);
    int ilo = INT_MAX, ihi = 0;
    for (auto& k : face) {
      ilo = std::min(ilo, k.first);
      ihi = std::max(ihi, k.first);
    }
    if (ilo == ihi) continue; // single corner, no branch in this direction
    Face F;
    F.p = p;
    F.q = q;
    F.imin = ilo;
    bool exact = true;
    for (auto& k : face)
      if (!xp_get(f, k).is_exact()) exact = false;
    F.exact = exact;
    int ud = (ihi - ilo) / p;
    if (exact) {
      std::vector<AlgNum> co((size_t)ud + 1, AlgNum());
      for (auto& k : face) {
        AlgNum v = *xp_get(f, k).exact;
        co[(size_t)((k.first - ilo) / p)] = v.embedded(tw);
      }
      F.Q = UPoly(std::move(co));
    } else {
      F.Qx.assign((size_t)ud + 1, XNum(AlgNum()));
      for (auto& k : face) F.Qx[(size_t)((k.first - ilo) / p)] = xp_get(f, k);
    }
    out.push_back(std::move(F));
  }
  return out;
}

XPoly transform(const XPoly& f, int p, int q, const XNum& c) {
  // f(x^p, x^q (c + y)) then divide by the least power of x present
  XPoly acc;
  for (auto& [k, a] : f) {
    int i = k.first, j = k.second;
    // (c + y)^i
    Rat binom(1);
    XNum cpow = xnum_pow(c, i);
    XNum cinv;
    bool use_div = c.known_nonzero();
    if (use_div) cinv = XNum(AlgNum(1L)) / c;
    for (int kk = 0; kk <= i; ++kk) {
      XNum coef = a * XNum(AlgNum(binom)) * cpow;
      xp_add(acc, {kk, p * j + q * i}, coef);
      binom *= Rat(i - kk);
      binom /= Rat(kk + 1);
      if (kk < i) {
        if (use_div)
          cpow = cpow * cinv;
        else
          cpow = xnum_pow(c, i - kk - 1);
      }
    }
  }
  int w = INT_MAX;
  for (auto& [k, a] : acc)
    if (a.known_nonzero()) w = std::min(w, k.second);
  if (w == INT_MAX) fail(errc::undecidable, "transformed polynomial vanished");
  for (auto& [k, a] : acc)
    if (a.ambiguous() && k.second < w)
      fail(errc::undecidable, "ambiguous low-order coefficient after transform");
  XPoly out;
  for (auto& [k, a] : acc) {
    if (k.second < w) continue; // ambiguous-but-tiny below w already rejected
    xp_add(out, {k.first, k.second - w}, a);
  }
  return out;
}

struct RawBranch {
  int N = 1;
  PSeries ser;
};

std::vector<RawBranch> expand(XPoly f, TowerBuilder& tb, int T, int depth) {
  if (depth > 24) fail(errc::undecidable, "branch expansion depth exceeded");
  std::vector<RawBranch> out;
  // dep-axis germ: dep | f
  int axis = 0;
  for (;;) {
    bool divisible = !f.empty();
    for (auto& [k, c] : f)
      if (k.first == 0) { divisible = false; break; }
    if (!divisible) break;
    if (++axis > 1)
      fail(errc::invalid_input, "non-reduced germ: repeated branch");
    XPoly g;
    for (auto& [k, c] : f) g[{k.first - 1, k.second}] = c;
    f = std::move(g);
    RawBranch rb;
    rb.N = 1;
    rb.ser = PSeries(kExactTrunc);
    out.push_back(std::move(rb));
  }
  if (f.empty()) return out;
  XNum c00 = xp_get(f, {0, 0});
  if (c00.known_nonzero()) return out;
  if (c00.ambiguous())
    fail(errc::undecidable, "ambiguous constant term in expansion");
  XNum c10 = xp_get(f, {1, 0});
  if (c10.known_nonzero()) {
    RawBranch rb;
    rb.N = 1;
    rb.ser = lift_regular(f, T);
    out.push_back(std::move(rb));
    return out;
  }
  auto faces = newton_faces(f, tb.tower());
  if (faces.empty())
    fail(errc::invalid_input,
         "no Newton polygon face: input is non-reduced or degenerate");
  for (auto& F : faces) {
    std::vector<std::pair<XNum, int>> uroots;
    if (F.exact) {
      uroots = tb.all_roots(F.Q);
      // one representative per u (all_roots already returns u-roots once)
    } else {
      fail(errc::undecidable,
           "inexact Newton face coefficients are not supported");
    }
    for (auto& [u, m] : uroots) {
      if (u.known_zero()) continue;
      XNum c;
      if (u.is_exact()) {
        auto branches = kth_roots(u.box, F.p);
        auto r = tb.kth_root(*u.exact, F.p, branches[0].c);
        if (r)
          c = XNum(*r);
        else
          c = XNum(branches[0]);
      } else {
        c = XNum(kth_roots(u.box, F.p)[0]);
      }
      XPoly f1 = transform(f, F.p, F.q, c);
      auto subs = expand(std::move(f1), tb, T, depth + 1);
      for (auto& e : subs) {
        RawBranch rb;
        rb.N = F.p * e.N;
        PSeries shifted = e.ser.shifted(e.N * F.q);
        PSeries lead(std::max(shifted.trunc(), e.N * F.q + 1));
        lead.add_term(e.N * F.q, c);
        rb.ser = lead + shifted;
        // a finite child series keeps the exact-trunc sentinel honest
        if (e.ser.trunc() >= kExactTrunc) rb.ser.set_trunc(kExactTrunc);
        out.push_back(std::move(rb));
      }
    }
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

CharChain characteristic_powers(const std::vector<int>& exponents, int n) {
  if (n < 1) fail(errc::invalid_input, "characteristic powers need n >= 1");
  CharChain out;
  int cur = n;
  std::vector<int> exps = exponents;
  std::sort(exps.begin(), exps.end());
  for (int e : exps) {
    if (e <= 0) fail(errc::invalid_input, "series exponents must be positive");
    if (cur == 1) break;
    if (e % cur != 0) {
      out.P.push_back(e);
      cur = std::gcd(cur, e);
      out.D.push_back(cur);
    }
  }
  return out;
}

CharChain characteristic_powers(const PSeries& s, int n) {
  if (n < 1) fail(errc::invalid_input, "characteristic powers need n >= 1");
  CharChain out;
  int cur = n;
  for (auto& [e, c] : s.terms()) {
    if (cur == 1) break;
    if (e % cur == 0) continue;
    if (c.ambiguous())
      fail(errc::undecidable,
           "ambiguous coefficient blocks characteristic power at t^" +
               std::to_string(e));
    out.P.push_back(e);
    cur = std::gcd(cur, e);
    out.D.push_back(cur);
  }
  if (cur != 1 && s.trunc() < kExactTrunc)
    fail(errc::undecidable,
         "characteristic chain undecidable at truncation " +
             std::to_string(s.trunc()));
  return out;
}

BranchInvariants puiseux_invariants(const PuiseuxBranch& b) {
  BranchInvariants inv;
  inv.N = b.ram;
  if (b.series.known_zero()) {
    inv.S = kExactTrunc;
    inv.order = Rat(kExactTrunc);
    return inv;
  }
  auto v = b.series.valuation();
  inv.S = *v;
  inv.order = Rat(inv.S) / Rat(inv.N);
  inv.chain = characteristic_powers(b.series, b.ram);
  int prev = b.ram;
  for (size_t i = 0; i < inv.chain.P.size(); ++i) {
    int ni = prev / inv.chain.D[i];
    int mi = inv.chain.P[i] / inv.chain.D[i];
    inv.pairs.emplace_back(mi, ni);
    prev = inv.chain.D[i];
  }
  return inv;
}

PSeries power_reparam(const PSeries& phi0, TowerBuilder& tb) {
  if (phi0.known_zero())
    fail(errc::invalid_input, "cannot reparametrize the zero series");
  int S = *phi0.valuation();
  XNum aS = phi0.coeff(S);
  if (!aS.known_nonzero())
    fail(errc::invalid_input, "zero leading coefficient");
  int T = phi0.trunc() >= kExactTrunc ? (1 << 26) : phi0.trunc() - S + 1;
  XNum c1;
  if (aS.is_exact()) {
    auto branches = kth_roots(aS.box, S);
    auto r = tb.kth_root(*aS.exact, S, branches[0].c);
    c1 = r ? XNum(AlgNum(1L)) / XNum(*r) : XNum(inv(branches[0]));
  } else {
    c1 = XNum(inv(kth_roots(aS.box, S)[0]));
  }
  // Solve phi(t(tau)) = tau^S by Newton in the series ring over tau.
  PSeries t(2);
  t.add_term(1, c1);
  int prec = 2;
  const PSeries& phi = phi0;
  while (true) {
    int want = std::min(T + 1, 2 * prec);
    PSeries tcur = t;
    tcur.set_trunc(want);
    PSeries ft = phi.compose(tcur);
    ft.set_trunc(want + S - 1);
    PSeries target(want + S - 1);
    target.add_term(S, XNum(AlgNum(1L)));
    PSeries resid = ft - target;
    PSeries dphi = phi.derivative();
    PSeries dft = dphi.compose(tcur); // valuation S-1
    PSeries unit = dft.shifted(-(S - 1));
    PSeries corr = resid.shifted(-(S - 1)) * unit.inverse();
    corr.set_trunc(want);
    t = tcur - corr;
    t.set_trunc(want);
    if (want >= T + 1) break;
    prec = want;
  }
  return t;
}

PuiseuxBranch invert_parametrization(const PuiseuxBranch& b, TowerBuilder& tb) {
  if (b.series.known_zero())
    fail(errc::invalid_input, "cannot invert an axis branch");
  int S = *b.series.valuation();
  int T = b.series.trunc() >= kExactTrunc
              ? b.series.trunc() - S + 1 + 2 * b.ram + 16
              : b.series.trunc() - S + 1;
  if (T > kExactTrunc) T = (1 << 26);
  PSeries t = power_reparam(b.series, tb);
  PSeries psi = t.pow(b.ram);
  psi.set_trunc(T + b.ram - 1);
  PuiseuxBranch out;
  out.vars = b.vars;
  out.base_point = b.base_point;
  out.param_var = b.dep_var;
  out.dep_var = b.param_var;
  out.ram = S;
  out.series = psi;
  out.tower = tb.tower();
  return out;
}

PuiseuxBranch standard_form(const PuiseuxBranch& b, TowerBuilder& tb) {
  if (b.series.known_zero()) return b;
  int S = *b.series.valuation();
  if (S >= b.ram) return b;
  return invert_parametrization(b, tb);
}

std::vector<PuiseuxBranch> newton_puiseux(const MultiPoly& f,
                                          const std::vector<AlgNum>& point,
                                          int param_var, TowerBuilder& tb,
                                          int min_trunc) {
  if (f.is_zero()) fail(errc::invalid_input, "zero polynomial");
  if (f.vars().size() != 2 || point.size() != 2)
    fail(errc::invalid_input, "newton_puiseux expects a plane curve");
  int dep_var = 1 - param_var;
  // translate the point to the origin
  std::vector<MultiPoly> repl;
  for (size_t i = 0; i < 2; ++i)
    repl.push_back(MultiPoly::variable(f.vars(), (int)i) +
                   MultiPoly::constant(f.vars(), point[i]));
  MultiPoly ft = f.compose(repl);
  if (!ft.eval({AlgNum(), AlgNum()}).is_zero())
    fail(errc::invalid_input, "point does not lie on the curve");

  std::vector<PuiseuxBranch> out;
  // strip a pencil-line component {param = const} through the point
  int pencil_comp = 0;
  for (;;) {
    bool divisible = !ft.is_zero();
    for (auto& [e, c] : ft.terms())
      if (e[(size_t)param_var] == 0) { divisible = false; break; }
    if (!divisible) break;
    if (++pencil_comp > 1)
      fail(errc::invalid_input, "non-reduced curve: repeated line component");
    std::map<std::vector<int>, AlgNum> terms;
    for (auto& [e, c] : ft.terms()) {
      std::vector<int> e2 = e;
      e2[(size_t)param_var] -= 1;
      terms[e2] = c;
    }
    ft = MultiPoly(f.vars(), std::move(terms));
    PuiseuxBranch pb;
    pb.vars = f.vars();
    pb.base_point = point;
    pb.param_var = dep_var; // the line is a graph over the other coordinate
    pb.dep_var = param_var;
    pb.ram = 1;
    pb.series = PSeries(kExactTrunc);
    pb.tower = tb.tower();
    out.push_back(std::move(pb));
  }
  if (ft.is_zero() || !ft.eval({AlgNum(), AlgNum()}).is_zero()) return out;

  int T = std::max(min_trunc, 16);
  for (int attempt = 0; attempt < 5; ++attempt) {
    TowerBuilder trial = tb;
    XPoly xp;
    for (auto& [e, c] : ft.terms())
      xp[{e[(size_t)dep_var], e[(size_t)param_var]}] = XNum(c);
    std::vector<RawBranch> raw;
    try {
      raw = expand(std::move(xp), trial, T, 0);
      std::vector<PuiseuxBranch> branches = out;
      for (auto& rb : raw) {
        PuiseuxBranch pb;
        pb.vars = f.vars();
        pb.base_point = point;
        pb.param_var = param_var;
        pb.dep_var = dep_var;
        pb.ram = rb.N;
        pb.series = rb.ser;
        pb.tower = trial.tower();
        // chain must close; throws undecidable to trigger a retry
        (void)characteristic_powers(pb.series, pb.ram);
        branches.push_back(std::move(pb));
      }
      // guard margin: chain decided plus 2N extra terms
      bool enough = true;
      for (auto& pb : branches) {
        if (pb.series.trunc() >= kExactTrunc) continue;
        auto inv = puiseux_invariants(pb);
        int need = (inv.chain.P.empty() ? inv.S : inv.chain.P.back()) +
                   2 * pb.ram + 1;
        need = std::max(need, min_trunc);
        if (pb.series.trunc() < need) { enough = false; break; }
      }
      if (!enough) {
        T *= 2;
        continue;
      }
      tb = trial;
      std::sort(branches.begin(), branches.end(),
                [](const PuiseuxBranch& a, const PuiseuxBranch& b) {
                  int va = a.series.known_zero() ? kExactTrunc
                                                 : a.series.terms().begin()->first;
                  int vb = b.series.known_zero() ? kExactTrunc
                                                 : b.series.terms().begin()->first;
                  if (a.ram != b.ram) return a.ram < b.ram;
                  if (va != vb) return va < vb;
                  cplx ca = a.series.known_zero() ? cplx(0)
                                                  : a.series.terms().begin()->second.box.c;
                  cplx cb = b.series.known_zero() ? cplx(0)
                                                  : b.series.terms().begin()->second.box.c;
                  if (ca.real() != cb.real()) return ca.real() < cb.real();
                  return ca.imag() < cb.imag();
                });
      for (auto& pb : branches)
        if (!branch_residual_ok(f, pb))
          fail(errc::undecidable, "branch residual check failed");
      return branches;
    } catch (const error& e) {
      if (e.kind() == errc::undecidable && attempt + 1 < 5) {
        T *= 2;
        continue;
      }
      throw;
    }
  }
  fail(errc::undecidable, "newton_puiseux: truncation retries exhausted");
}

bool branch_residual_ok(const MultiPoly& f, const PuiseuxBranch& b) {
  int T = std::min(b.series.trunc(), 1 << 20);
  std::vector<PSeries> coords(2, PSeries(T));
  PSeries par(T);
  par.add_term(0, XNum(b.base_point[(size_t)b.param_var]));
  par.add_term(b.ram, XNum(AlgNum(1L)));
  PSeries dep = b.series;
  dep.set_trunc(T);
  PSeries base(T);
  base.add_term(0, XNum(b.base_point[(size_t)b.dep_var]));
  dep = dep + base;
  coords[(size_t)b.param_var] = par;
  coords[(size_t)b.dep_var] = dep;
  PSeries r = eval_on_series(f, coords);
  for (auto& [e, c] : r.terms())
    if (c.known_nonzero()) return false;
  return true;
}

std::vector<cball> branch_fiber_points(const PuiseuxBranch& b,
                                       const cball& eta) {
  std::vector<cball> out;
  cball t0 = kth_roots(eta, b.ram)[0];
  double tailmag = 0;
  for (auto& [e, c] : b.series.terms()) tailmag += c.box.mag_upper();
  int T = std::min(b.series.trunc(), 1 << 20);
  double pad = (tailmag + 1) * std::pow(t0.mag_upper(), (double)T) * 2;
  cball base = b.base_point[(size_t)b.dep_var].approx();
  for (int j = 0; j < b.ram; ++j) {
    double th = 2 * M_PI * j / b.ram;
    cball tj = t0 * cball(cplx(std::cos(th), std::sin(th)), 4e-16);
    cball v = b.series.eval_ball(tj) + base;
    v.r += pad;
    out.push_back(v);
  }
  return out;
}

} // namespace curvetopo
