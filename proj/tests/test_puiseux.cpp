#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvetopo/puiseux.hpp"
#include "curvetopo/roots.hpp"

using namespace curvetopo;

namespace {

const std::vector<std::string> XY = {"x", "y"};

// Branch series are canonical only up to the t -> zeta_N t reparametrization;
// a printed parametrization matches if some twist reproduces every listed
// coefficient.
bool orbit_matches(const PuiseuxBranch& b,
                   const std::vector<std::pair<int, cplx>>& printed,
                   double tol = 1e-7) {
  for (int j = 0; j < b.ram; ++j) {
    double th = 2 * M_PI * j / b.ram;
    bool ok = true;
    for (auto& [e, v] : printed) {
      cplx tw(std::cos(th * e), std::sin(th * e));
      cplx got = b.series.coeff(e).box.c * tw;
      if (std::abs(got - v) > tol * (1 + std::abs(v))) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<AlgNum> origin() { return {AlgNum(), AlgNum()}; }

} // namespace

TEST_CASE("characteristic powers: definition on explicit exponent lists") {
  auto c = characteristic_powers(std::vector<int>{6, 8, 9}, 4);
  CHECK(c.P == std::vector<int>{6, 9});
  CHECK(c.D == std::vector<int>{2, 1});
  auto e = characteristic_powers(std::vector<int>{2, 4}, 2);
  CHECK(e.P.empty());
  CHECK(e.D.empty());
  auto k = characteristic_powers(std::vector<int>{2, 8, 11}, 4);
  CHECK(k.P == std::vector<int>{2, 11});
  CHECK(k.D == std::vector<int>{2, 1});
}

TEST_CASE("characteristic powers: undecidable at truncation") {
  PSeries s(6);
  s.add_term(2, XNum(AlgNum(1L)));
  s.add_term(4, XNum(AlgNum(1L)));
  // chain w.r.t. 4 still open (gcd 2) and the tail is unknown
  CHECK_THROWS_AS((void)characteristic_powers(s, 4), error);
  PSeries done(6);
  done.add_term(2, XNum(AlgNum(1L)));
  done.add_term(3, XNum(AlgNum(1L)));
  auto c = characteristic_powers(done, 4);
  CHECK(c.P == std::vector<int>{2, 3});
  CHECK(c.D == std::vector<int>{2, 1});
}

TEST_CASE("newton_puiseux: cusp normal form") {
  auto Q = Tower::rationals();
  MultiPoly f = parse_multipoly(Q, XY, "y^2-x^3");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), /*param=*/0, tb);
  REQUIRE(br.size() == 1);
  CHECK(br[0].ram == 2);
  auto inv = puiseux_invariants(br[0]);
  CHECK(inv.S == 3);
  CHECK(inv.order == rat_of(3, 2));
  REQUIRE(inv.pairs.size() == 1);
  CHECK(inv.pairs[0] == std::pair<int, int>(3, 2));
}

TEST_CASE("newton_puiseux: pencil-ready branch of the B(3,10) sextic") {
  auto Q = Tower::rationals();
  MultiPoly f = parse_multipoly(
      Q, XY,
      "(y*(1-y)-x^2)^3 + (y^2*(1-y)-x^2*y+x*y^2+18/25*y^3)^2");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), /*param=*/1, tb);
  REQUIRE(br.size() == 1);
  CHECK(br[0].ram == 6);
  // printed: x = t^3 + 1/2 t^7 + ...
  CHECK(orbit_matches(br[0], {{3, cplx(1, 0)}, {7, cplx(0.5, 0)}}));
  CHECK(br[0].series.coeff(3).is_exact());
  CHECK(branch_residual_ok(f, br[0]));
}

TEST_CASE("newton_puiseux: Sp1 branch of the second sextic") {
  auto Q = Tower::rationals();
  MultiPoly f = parse_multipoly(Q, XY, "(y^2-y^3-x^3)^2-x^3*y^3");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), 1, tb);
  REQUIRE(br.size() == 1);
  CHECK(br[0].ram == 6);
  // leading sign recomputed from f: x = t^4 -+ 1/3 t^7 + ... (the twist
  // orbit carries both t^7 signs)
  CHECK(orbit_matches(br[0], {{4, cplx(1, 0)}, {7, cplx(1.0 / 3, 0)}}));
}

TEST_CASE("newton_puiseux: B(3,8) branch needs sixth root of two") {
  auto tw = Tower::rationals()->extend("r6_2", 6, {Rat(2)},
                                       cplx(1.12246204830937, 0));
  MultiPoly f = parse_multipoly(tw, XY, "((y-1)^2+x^2-1)^3+x^4*y^2");
  TowerBuilder tb(tw);
  auto br = newton_puiseux(f, origin(), 1, tb);
  REQUIRE(br.size() == 1);
  CHECK(br[0].ram == 6);
  double r2 = std::sqrt(2.0), r62 = std::pow(2.0, 1.0 / 6);
  // printed: x = -sqrt(2) t^3 + (2^(1/6)/2) t^5 + ...
  CHECK(orbit_matches(br[0], {{3, cplx(-r2, 0)}, {5, cplx(r62 / 2, 0)}}));
}

TEST_CASE("newton_puiseux: the exceptional sextic splits into L and K") {
  auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
  MultiPoly f = parse_multipoly(
      tw, XY,
      "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
  TowerBuilder tb(tw);
  auto br = newton_puiseux(f, origin(), 1, tb);
  REQUIRE(br.size() == 2);
  const PuiseuxBranch& L = br[0].ram == 2 ? br[0] : br[1];
  const PuiseuxBranch& K = br[0].ram == 2 ? br[1] : br[0];
  REQUIRE(L.ram == 2);
  REQUIRE(K.ram == 4);
  // printed: L: x = 2 tau + ..., y = tau^2
  CHECK(orbit_matches(L, {{1, cplx(2, 0)}}));
  // printed: K: x = -(i sqrt2/2ait) t^2 - (4/9) (-6)^{1/4} t^5 + ..., y = t^4
  double m = std::sqrt(2.0) / 2;
  CHECK(orbit_matches(K, {{2, cplx(0, -m)}}));
  // |t^5 coefficient| = 4/9 * 6^(1/4) regardless of twist
  double c5 = std::abs(K.series.coeff(5).box.c);
  CHECK(std::abs(c5 - 4.0 / 9 * std::pow(6.0, 0.25)) < 1e-9);
  // K stays exact thanks to radical adjunction
  CHECK(K.series.coeff(5).is_exact());
  auto invK = puiseux_invariants(K);
  CHECK(invK.chain.P == std::vector<int>{2, 5});
  CHECK(branch_residual_ok(f, K));
  CHECK(branch_residual_ok(f, L));
}

TEST_CASE("newton_puiseux: double cover curve adjoins sqrt3") {
  auto Q = Tower::rationals();
  MultiPoly g =
      parse_multipoly(Q, XY, "(y-x^2)^3 + (2*y-2*x^2+32/27*x^3)^2");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(g, origin(), 1, tb);
  REQUIRE(br.size() == 1);
  CHECK(br[0].ram == 4);
  // printed: x = t^2 + (16 sqrt3 / 243) t^7 + ...
  double v = 16 * std::sqrt(3.0) / 243;
  CHECK(orbit_matches(br[0], {{2, cplx(1, 0)}, {7, cplx(v, 0)}},
                      1e-6));
  CHECK(br[0].series.coeff(7).is_exact());
}

TEST_CASE("puiseux invariants from synthetic parametrizations") {
  SUBCASE("K-branch of C_{3,15}: x=t^2, y = t^4 + ... + t^13") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 2;
    PSeries s(18);
    s.add_term(4, XNum(AlgNum(1L)));
    s.add_term(13, XNum(AlgNum(rat_of(1, 2))));
    b.series = s;
    b.tower = Tower::rationals();
    auto inv = puiseux_invariants(b);
    REQUIRE(inv.pairs.size() == 1);
    CHECK(inv.pairs[0] == std::pair<int, int>(13, 2));
    CHECK(inv.order == Rat(2));
  }
  SUBCASE("Sp1: x=t^4, y=t^6+t^8+t^9") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 4;
    PSeries s(14);
    s.add_term(6, XNum(AlgNum(1L)));
    s.add_term(8, XNum(AlgNum(1L)));
    s.add_term(9, XNum(AlgNum(1L)));
    b.series = s;
    b.tower = Tower::rationals();
    auto inv = puiseux_invariants(b);
    REQUIRE(inv.pairs.size() == 2);
    CHECK(inv.pairs[0] == std::pair<int, int>(3, 2));
    CHECK(inv.pairs[1] == std::pair<int, int>(9, 2));
    CHECK(inv.order == rat_of(3, 2));
  }
}

namespace {
// test-only oracle: reversion of y = t^S * unit by undetermined rational
// coefficients, independent of the production code path
std::map<int, Rat> naive_invert(const std::map<int, Rat>& phi, int S, int N,
                                int order) {
  // t(tau) = tau + sum_{k>=2} c_k tau^k  (leading coefficient of phi is 1)
  std::map<int, Rat> t{{1, Rat(1)}};
  for (int k = 2; k <= order; ++k) {
    // coefficient of tau^{S+k-1} in phi(t(tau)) must vanish
    std::map<int, Rat> tk = t;
    tk[k] = Rat(0);
    auto eval_coeff = [&](const std::map<int, Rat>& tt, int target) {
      // expand phi(tt) and return coefficient of tau^target
      std::map<int, Rat> acc;
      for (auto& [e, a] : phi) {
        // tt^e
        std::map<int, Rat> p{{0, Rat(1)}};
        for (int rep = 0; rep < e; ++rep) {
          std::map<int, Rat> np;
          for (auto& [e1, c1] : p)
            for (auto& [e2, c2] : tt) {
              if (e1 + e2 > target) continue;
              np[e1 + e2] += c1 * c2;
            }
          p = np;
        }
        for (auto& [ee, cc] : p) acc[ee] += a * cc;
      }
      return acc.count(target) ? acc[target] : Rat(0);
    };
    Rat r0 = eval_coeff(tk, S + k - 1);
    tk[k] = Rat(1);
    Rat r1 = eval_coeff(tk, S + k - 1);
    Rat slope = r1 - r0; // linear in c_k
    t[k] = slope == 0 ? Rat(0) : -r0 / slope;
    if (t[k] == 0) t.erase(k);
  }
  // psi = t(tau)^N
  std::map<int, Rat> psi{{0, Rat(1)}};
  for (int rep = 0; rep < N; ++rep) {
    std::map<int, Rat> np;
    for (auto& [e1, c1] : psi)
      for (auto& [e2, c2] : t) {
        if (e1 + e2 > order + N) continue;
        np[e1 + e2] += c1 * c2;
      }
    psi = np;
  }
  return psi;
}
} // namespace

TEST_CASE("invert_parametrization") {
  TowerBuilder tb(Tower::rationals());
  SUBCASE("smooth reversal x=t, y=t^2") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 1;
    PSeries s(12);
    s.add_term(2, XNum(AlgNum(1L)));
    b.series = s;
    b.tower = Tower::rationals();
    auto ib = invert_parametrization(b, tb);
    CHECK(ib.ram == 2);
    CHECK(ib.param_var == 1);
    auto v = ib.series.valuation();
    REQUIRE(v);
    CHECK(*v == 1);
    CHECK(*ib.series.coeff(1).exact == AlgNum(1L));
  }
  SUBCASE("(13,2) cusp component inverts to the 11-chain") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 2;
    PSeries s(20);
    s.add_term(4, XNum(AlgNum(1L)));
    s.add_term(13, XNum(AlgNum(1L)));
    b.series = s;
    b.tower = Tower::rationals();
    auto ib = invert_parametrization(b, tb);
    CHECK(ib.ram == 4);
    auto chain = characteristic_powers(ib.series, 4);
    CHECK(chain.P == std::vector<int>{2, 11});
    CHECK(chain.D == std::vector<int>{2, 1});
  }
  SUBCASE("pairs {(5,2)}, S=4 against the naive reversion oracle") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 2;
    PSeries s(16);
    s.add_term(4, XNum(AlgNum(1L)));
    s.add_term(5, XNum(AlgNum(1L)));
    b.series = s;
    b.tower = Tower::rationals();
    auto ib = invert_parametrization(b, tb);
    CHECK(ib.ram == 4);
    // psi_0 = psi / tau^2 has first characteristic power m1 - S = 5 - 4 = 1
    auto chain = characteristic_powers(ib.series, 2);
    REQUIRE(!chain.P.empty());
    CHECK(chain.P[0] == 3); // psi exponent 3 = shift 2 + psi_0 power 1
    // oracle comparison, coefficients up to tau^8
    auto psi = naive_invert({{4, Rat(1)}, {5, Rat(1)}}, 4, 2, 8);
    for (auto& [e, c] : psi) {
      if (e > 8 || c == 0) continue;
      auto got = ib.series.coeff(e);
      REQUIRE(got.is_exact());
      CHECK(*got.exact == AlgNum(c));
    }
  }
  SUBCASE("involution up to truncation") {
    PuiseuxBranch b;
    b.vars = XY;
    b.base_point = origin();
    b.param_var = 0;
    b.dep_var = 1;
    b.ram = 2;
    PSeries s(16);
    s.add_term(4, XNum(AlgNum(2L)));
    s.add_term(7, XNum(AlgNum(rat_of(1, 3))));
    b.series = s;
    b.tower = Tower::rationals();
    auto ib = invert_parametrization(b, tb);
    auto bb = invert_parametrization(ib, tb);
    CHECK(bb.ram == b.ram);
    for (auto& [e, c] : b.series.terms()) {
      if (e >= bb.series.trunc()) continue;
      cball got = bb.series.coeff(e).box;
      CHECK(std::abs(got.c - c.box.c) < 1e-8);
    }
  }
}

TEST_CASE("sum of ramification indices matches fiber count near the point") {
  auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
  MultiPoly f = parse_multipoly(
      tw, XY,
      "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
  TowerBuilder tb(tw);
  auto br = newton_puiseux(f, origin(), 1, tb);
  int total = 0;
  for (auto& b : br) total += b.ram;
  CHECK(total == 6); // all six fiber points collapse into the origin
  // and the fiber positions from the series agree with direct root solving
  cball eta(0.01, 0.0, 0.0);
  std::vector<cplx> co;
  UPoly fx = f.substitute(1, AlgNum(rat_of(1, 100))).to_upoly(0);
  for (int i = 0; i <= fx.deg(); ++i) co.push_back(fx[i].approx().c);
  auto direct = aberth(co);
  for (auto& b : br) {
    for (auto& pt : branch_fiber_points(b, eta)) {
      double best = 1e9;
      for (auto& d : direct) best = std::min(best, std::abs(d - pt.c));
      CHECK(best < 1e-6);
    }
  }
}
