#include "curvetopo/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "curvetopo/factor.hpp"
#include "curvetopo/multipoly.hpp"

namespace curvetopo {

std::vector<IsolatedRoot> critical_pencil_values(const MultiPoly& f,
                                                 int pencil_var) {
  if (f.is_zero() || f.vars().size() != 2)
    fail(errc::invalid_input, "pencil needs a plane curve");
  int fiber_var = 1 - pencil_var;
  auto lead = f.coeffs_in(fiber_var).back();
  if (!lead.is_constant())
    fail(errc::degenerate,
         "pencil-degenerate: leading fiber coefficient varies");
  MultiPoly disc = discriminant(f, f.vars()[(size_t)fiber_var]);
  if (disc.is_zero())
    fail(errc::invalid_input, "non-reduced curve (vanishing discriminant)");
  return isolate_complex_roots(disc.to_upoly(pencil_var));
}

namespace {

double min_pairwise_gap(const std::vector<IsolatedRoot>& w) {
  double m = 1e300;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      m = std::min(m, std::abs(w[i].disk.c - w[j].disk.c));
  return w.size() < 2 ? 1.0 : m;
}

// path from `from` to `to` dodging the other critical values by circular
// detours on the upper side; densely sampled polyline
std::vector<cplx> detour_path(cplx from, cplx to,
                              const std::vector<cplx>& obstacles,
                              double clearance) {
  std::vector<cplx> pts{from};
  cplx dir = to - from;
  double len = std::abs(dir);
  if (len == 0) return pts;
  dir /= len;
  struct Hit {
    double along;
    cplx ob;
  };
  std::vector<Hit> hits;
  for (cplx ob : obstacles) {
    cplx rel = ob - from;
    double along = (rel * std::conj(dir)).real();
    if (along <= clearance || along >= len - clearance) continue;
    double off = (rel * std::conj(dir)).imag();
    if (std::abs(off) < clearance) hits.push_back({along, ob});
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.along < b.along; });
  for (auto& h : hits) {
    // walk to the entry point, then a half circle over the obstacle
    cplx entry = h.ob - dir * clearance;
    pts.push_back(entry);
    for (int k = 1; k <= 8; ++k) {
      double ang = M_PI * k / 8.0;
      // rotate (-clearance * dir) around ob by -ang (upper side relative to
      // travel direction)
      cplx rot = std::exp(cplx(0, -ang));
      pts.push_back(h.ob - dir * clearance * rot);
    }
  }
  pts.push_back(to);
  return pts;
}

} // namespace

PencilSetup plan_pencil(const MultiPoly& f, int pencil_var,
                        std::optional<Rat> base_hint, int sign) {
  PencilSetup s;
  s.pencil_var = pencil_var;
  s.fiber_var = 1 - pencil_var;
  s.critical = critical_pencil_values(f, pencil_var);
  if (s.critical.empty()) {
    s.base = 0;
    return s;
  }
  double minmod = 1e300, maxmod = 0;
  for (auto& w : s.critical) {
    double m = std::abs(w.disk.c);
    maxmod = std::max(maxmod, m);
    if (m > 1e-12) minmod = std::min(minmod, m);
  }
  if (minmod > 1e290) minmod = 1.0;
  double gap = min_pairwise_gap(s.critical);
  if (base_hint) {
    s.base = *base_hint;
  } else {
    // sign * eps just off the smallest-magnitude critical value
    double eps = minmod / 2;
    Rat base((long)std::floor(eps * (1 << 20)), 1L << 20);
    base.canonicalize();
    auto r = rat_reconstruct(eps, 64, eps * 0.05);
    if (r && *r != 0) base = abs(*r);
    double clearance = std::min(gap / 4, minmod / 4);
    for (int tries = 0;; ++tries) {
      double b = sign * rat_double(base);
      bool ok = base > 0;
      for (auto& w : s.critical)
        if (std::abs(cplx(b, 0) - w.disk.c) < clearance) ok = false;
      if (ok) break;
      base = base * rat_of(7, 8);
      if (tries > 200)
        fail(errc::degenerate, "could not place a base point");
    }
    s.base = Rat(sign) * base;
  }
  cplx b(rat_double(s.base), 0);
  for (auto& w : s.critical)
    if (std::abs(b - w.disk.c) < gap / 8)
      fail(errc::degenerate, "base point too close to a critical value");
  // loop plan: sort by argument, then modulus, of w - base
  std::vector<int> order((size_t)s.critical.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    cplx wi = s.critical[(size_t)i].disk.c - b;
    cplx wj = s.critical[(size_t)j].disk.c - b;
    double ai = std::arg(wi), aj = std::arg(wj);
    if (std::abs(ai - aj) > 1e-12) return ai < aj;
    return std::abs(wi) < std::abs(wj);
  });
  std::vector<IsolatedRoot> sorted;
  for (int i : order) sorted.push_back(s.critical[(size_t)i]);
  s.critical = std::move(sorted);
  for (size_t k = 0; k < s.critical.size(); ++k) {
    PencilSetup::Loop loop;
    loop.center = s.critical[k].disk.c;
    double rad = gap / 3.0;
    rad = std::min(rad, std::abs(loop.center - b) / 3.0);
    loop.radius = rad;
    std::vector<cplx> obstacles;
    for (size_t j = 0; j < s.critical.size(); ++j)
      if (j != k) obstacles.push_back(s.critical[j].disk.c);
    cplx target = loop.center - rad * (loop.center - b) / std::abs(loop.center - b);
    loop.path = detour_path(b, target, obstacles, gap / 3.5);
    s.loops.push_back(std::move(loop));
  }
  s.big_radius = 2 * maxmod + 2 * std::abs(b) + 1;
  return s;
}

namespace {

struct FiberSolver {
  std::vector<UPoly> coeffs; // fiber-poly coefficients as polys in the pencil var
  int degree;

  explicit FiberSolver(const MultiPoly& f, int pencil_var) {
    int fiber_var = 1 - pencil_var;
    auto cs = f.coeffs_in(fiber_var);
    for (auto& c : cs) coeffs.push_back(c.to_upoly(pencil_var));
    degree = (int)cs.size() - 1;
  }

  std::vector<cball> eval_coeffs(const cball& eta) const {
    std::vector<cball> out;
    for (auto& c : coeffs) out.push_back(c.eval_ball(eta));
    return out;
  }

  // fresh solve with certification
  std::vector<cball> solve(const cball& eta) const {
    auto co = eval_coeffs(eta);
    std::vector<cplx> centers;
    for (auto& c : co) centers.push_back(c.c);
    auto approx = aberth(centers);
    // polish
    std::vector<cplx> dc;
    for (size_t i = 1; i < centers.size(); ++i)
      dc.push_back((double)i * centers[i]);
    for (auto& z : approx)
      for (int it = 0; it < 50; ++it) {
        cplx p = 0, d = 0;
        for (size_t i = centers.size(); i-- > 0;) p = p * z + centers[i];
        for (size_t i = dc.size(); i-- > 0;) d = d * z + dc[i];
        if (d == cplx(0, 0)) break;
        cplx step = p / d;
        z -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(z))) break;
      }
    auto cert = certify_roots(co, approx);
    if (!cert) fail(errc::resource, "base fiber certification failed");
    for (size_t i = 0; i < cert->size(); ++i)
      for (size_t j = i + 1; j < cert->size(); ++j)
        if (overlap((*cert)[i], (*cert)[j]))
          fail(errc::resource, "base fiber roots not separated");
    return *cert;
  }

  // Newton-correct predictions at eta; empty optional on failure
  std::optional<std::vector<cball>> correct(const cball& eta,
                                            std::vector<cplx> guess) const {
    auto co = eval_coeffs(eta);
    std::vector<cplx> centers;
    for (auto& c : co) centers.push_back(c.c);
    std::vector<cplx> dc;
    for (size_t i = 1; i < centers.size(); ++i)
      dc.push_back((double)i * centers[i]);
    for (auto& z : guess) {
      bool done = false;
      for (int it = 0; it < 30; ++it) {
        cplx p = 0, d = 0;
        for (size_t i = centers.size(); i-- > 0;) p = p * z + centers[i];
        for (size_t i = dc.size(); i-- > 0;) d = d * z + dc[i];
        if (d == cplx(0, 0)) return std::nullopt;
        cplx step = p / d;
        z -= step;
        if (std::abs(step) < 1e-14 * (1 + std::abs(z))) { done = true; break; }
      }
      if (!done) return std::nullopt;
    }
    auto cert = certify_roots(co, guess);
    if (!cert) return std::nullopt;
    for (size_t i = 0; i < cert->size(); ++i)
      for (size_t j = i + 1; j < cert->size(); ++j)
        if (overlap((*cert)[i], (*cert)[j])) return std::nullopt;
    return cert;
  }
};

double min_sep(const std::vector<cball>& fiber) {
  double m = 1e300;
  for (size_t i = 0; i < fiber.size(); ++i)
    for (size_t j = i + 1; j < fiber.size(); ++j)
      m = std::min(m, std::abs(fiber[i].c - fiber[j].c));
  return m;
}

// walk the parameter from a to b in certified steps, appending to trace
void walk(const FiberSolver& fs, cplx a, cplx b, std::vector<cball>& fiber,
          FiberTrace& trace, long& budget) {
  double total = std::abs(b - a);
  if (total == 0) return;
  double t = 0;
  double step = 0.5;
  while (t < 1.0) {
    if (--budget < 0) fail(errc::resource, "tracking step budget exhausted");
    double sep = min_sep(fiber);
    double tn = std::min(1.0, t + step);
    cplx eta = a + (b - a) * tn;
    std::vector<cplx> guess;
    for (auto& x : fiber) guess.push_back(x.c);
    auto next = fs.correct(cball(eta, 1e-300), guess);
    bool ok = next.has_value();
    if (ok) {
      double motion = 0;
      for (size_t i = 0; i < fiber.size(); ++i)
        motion = std::max(motion, std::abs((*next)[i].c - fiber[i].c));
      if (motion > sep / 5) ok = false;
    }
    if (!ok) {
      step /= 2;
      if (step < 1e-9)
        fail(errc::resource,
             "step size underflow near a critical value; adjust the loop");
      continue;
    }
    fiber = *next;
    t = tn;
    trace.params.push_back(eta);
    for (size_t i = 0; i < fiber.size(); ++i)
      trace.strands[i].push_back(fiber[i]);
    step = std::min(step * 1.4, 0.5);
  }
}

void walk_circle(const FiberSolver& fs, cplx center, double radius,
                 double ang0, double ang1, std::vector<cball>& fiber,
                 FiberTrace& trace, long& budget) {
  // parametrize by angle; certified steps as in walk()
  double t = ang0;
  double step = (ang1 - ang0) / 64;
  while ((ang1 > ang0 && t < ang1) || (ang1 < ang0 && t > ang1)) {
    if (--budget < 0) fail(errc::resource, "tracking step budget exhausted");
    double sep = min_sep(fiber);
    double tn = ang1 > ang0 ? std::min(ang1, t + step) : std::max(ang1, t + step);
    cplx eta = center + radius * std::exp(cplx(0, tn));
    std::vector<cplx> guess;
    for (auto& x : fiber) guess.push_back(x.c);
    auto next = fs.correct(cball(eta, 1e-300), guess);
    bool ok = next.has_value();
    if (ok) {
      double motion = 0;
      for (size_t i = 0; i < fiber.size(); ++i)
        motion = std::max(motion, std::abs((*next)[i].c - fiber[i].c));
      if (motion > sep / 5) ok = false;
    }
    if (!ok) {
      step /= 2;
      if (std::abs(step) < 1e-9)
        fail(errc::resource, "circle step underflow");
      continue;
    }
    fiber = *next;
    t = tn;
    trace.params.push_back(eta);
    for (size_t i = 0; i < fiber.size(); ++i)
      trace.strands[i].push_back(fiber[i]);
    step = step * 1.4;
    double cap = (ang1 - ang0) / 64;
    if (std::abs(step) > std::abs(cap)) step = cap;
  }
}

} // namespace

FiberTrace track_fiber(const MultiPoly& f, const PencilSetup& setup,
                       int loop_index) {
  FiberSolver fs(f, setup.pencil_var);
  cplx base(rat_double(setup.base), 0);
  FiberTrace trace;
  std::vector<cball> fiber = fs.solve(cball(base, 1e-300));
  // deterministic strand order at the base fiber
  std::sort(fiber.begin(), fiber.end(), [](const cball& a, const cball& b) {
    if (a.c.real() != b.c.real()) return a.c.real() < b.c.real();
    return a.c.imag() < b.c.imag();
  });
  std::vector<cball> start = fiber;
  trace.strands.assign(fiber.size(), {});
  trace.params.push_back(base);
  for (size_t i = 0; i < fiber.size(); ++i)
    trace.strands[i].push_back(fiber[i]);
  long budget = 2000000;
  if (loop_index >= 0) {
    const auto& loop = setup.loops[(size_t)loop_index];
    for (size_t k = 0; k + 1 < loop.path.size(); ++k)
      walk(fs, loop.path[k], loop.path[k + 1], fiber, trace, budget);
    cplx entry = loop.path.back();
    double ang = std::arg(entry - loop.center);
    walk_circle(fs, loop.center, loop.radius, ang, ang + 2 * M_PI, fiber,
                trace, budget);
    for (size_t k = loop.path.size(); k-- > 1;)
      walk(fs, loop.path[k], loop.path[k - 1], fiber, trace, budget);
  } else {
    // big circle: out along the real axis (with detours), around, back
    double R = setup.big_radius;
    std::vector<cplx> obstacles;
    for (auto& w : setup.critical) obstacles.push_back(w.disk.c);
    double gap = min_pairwise_gap(setup.critical);
    auto path = detour_path(base, cplx(R, 0), obstacles, gap / 3.5);
    for (size_t k = 0; k + 1 < path.size(); ++k)
      walk(fs, path[k], path[k + 1], fiber, trace, budget);
    walk_circle(fs, cplx(0, 0), R, 0, 2 * M_PI, fiber, trace, budget);
    for (size_t k = path.size(); k-- > 1;)
      walk(fs, path[k], path[k - 1], fiber, trace, budget);
  }
  // close the loop: match the final fiber against the start configuration
  trace.permutation.assign(fiber.size(), -1);
  for (size_t i = 0; i < fiber.size(); ++i) {
    int best = -1;
    for (size_t j = 0; j < start.size(); ++j) {
      if (std::abs(fiber[i].c - start[j].c) <=
          0.45 * std::min(min_sep(start), min_sep(fiber))) {
        best = (int)j;
        break;
      }
    }
    if (best < 0)
      fail(errc::resource, "loop did not close onto the start fiber");
    trace.permutation[i] = best;
  }
  return trace;
}

std::string trace_dump(const FiberTrace& trace, int loop_index) {
  std::ostringstream os;
  os.precision(17);
  for (size_t k = 0; k < trace.params.size(); ++k) {
    os << "loop " << loop_index << " param " << trace.params[k].real() << " "
       << trace.params[k].imag();
    for (auto& s : trace.strands)
      os << " strand " << s[k].c.real() << " " << s[k].c.imag() << " "
         << s[k].r;
    os << "\n";
  }
  return os.str();
}

BraidWord braid_word(const FiberTrace& trace, double theta) {
  return braid_from_paths(trace.strands, theta);
}

GroupPresentation van_kampen(const std::vector<BraidWord>& braids, int strands,
                             bool projective) {
  GroupPresentation p;
  for (int i = 1; i <= strands; ++i) p.gens.push_back("g" + std::to_string(i));
  p.meridian.assign((size_t)strands, true);
  for (auto& b : braids) {
    if (b.strands != strands)
      fail(errc::invalid_input, "strand count mismatch in van kampen");
    for (auto& rel : braid_relations(b)) p.relators.push_back(rel);
  }
  if (projective) {
    Word big;
    for (int i = strands; i >= 1; --i) big.push_back(i);
    p.relators.push_back(big);
  }
  p.provenance = projective ? "van kampen projective" : "van kampen affine";
  return p;
}

MonodromyResult braid_monodromy(const MultiPoly& f, int pencil_var,
                                std::optional<Rat> base_hint, int sign) {
  MonodromyResult out;
  out.setup = plan_pencil(f, pencil_var, base_hint, sign);
  int d = f.degree(1 - pencil_var);
  for (size_t k = 0; k < out.setup.loops.size(); ++k)
    out.traces.push_back(track_fiber(f, out.setup, (int)k));
  FiberTrace big = track_fiber(f, out.setup, -1);
  const double thetas[] = {0.013, 0.61, 1.07, 1.9, 2.41, 0.37};
  bool done = false;
  for (double theta : thetas) {
    try {
      std::vector<BraidWord> braids;
      for (auto& tr : out.traces) braids.push_back(braid_word(tr, theta));
      BraidWord bc = braid_word(big, theta);
      out.braids = std::move(braids);
      out.big_circle = bc;
      out.theta = theta;
      done = true;
      break;
    } catch (const error& e) {
      if (e.kind() != errc::degenerate) throw;
    }
  }
  if (!done)
    fail(errc::degenerate, "no projection direction separated the strands");
  out.affine = van_kampen(out.braids, d, false);
  out.projective = van_kampen(out.braids, d, true);
  return out;
}

bool big_circle_consistent(const MonodromyResult& r) {
  if (r.braids.empty()) return true;
  BraidWord prod;
  prod.strands = r.big_circle.strands;
  for (auto& b : r.braids) prod = prod * b;
  if (prod.permutation() != r.big_circle.permutation()) return false;
  return prod.writhe() == r.big_circle.writhe();
}

} // namespace curvetopo
