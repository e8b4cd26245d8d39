#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvetopo/dual.hpp"

using namespace curvetopo;

namespace {

const std::vector<std::string> XY = {"x", "y"};

MultiPoly curve(const TowerPtr& tw, const std::string& text) {
  return parse_multipoly(tw, XY, text);
}

std::vector<AlgNum> origin() { return {AlgNum(), AlgNum()}; }

SingularityReport classify0(const MultiPoly& f, TowerBuilder& tb) {
  return classify_singularity(f, origin(), tb);
}

std::string dual_label0(const MultiPoly& f) {
  TowerBuilder tb(f.terms().begin()->second.tower());
  auto rep = classify0(f, tb);
  return dual_singularity_type(rep, tb).label;
}

} // namespace

TEST_CASE("dual of a smooth branch: b2 = 1/(4 a2)") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "y-3*x^2-x^3");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), 0, tb);
  REQUIRE(br.size() == 1);
  auto db = dual_branch(br[0], tb);
  CHECK(db.dual.ram == 1);
  auto c2 = db.dual.series.coeff(2);
  REQUIRE(c2.is_exact());
  CHECK(*c2.exact == AlgNum(rat_of(1, 12)));
}

TEST_CASE("dual valuation is (s-1)N on corpus branches") {
  auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
  MultiPoly f = parse_multipoly(
      tw, XY,
      "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
  TowerBuilder tb(tw);
  auto br = newton_puiseux(f, origin(), 0, tb);
  for (auto& b : br) {
    PuiseuxBranch s = standard_form(b, tb);
    auto inv = puiseux_invariants(s);
    auto db = dual_branch(s, tb);
    CHECK(*db.u_series.valuation() == inv.S - inv.N);
  }
}

TEST_CASE("dual of the Sp1 germ is an A8 with Puiseux order 3") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "(y^2-x^3)^2+(x*y)^3");
  TowerBuilder tb(Q);
  auto rep = classify0(f, tb);
  REQUIRE(rep.label == "Sp1");
  auto d = dual_singularity_type(rep, tb);
  CHECK(d.label == "A8");
  REQUIRE(d.branches.size() == 1);
  CHECK(d.branches[0].dual.ram == 2);
  CHECK(d.branches[0].dual_invariants.order == Rat(3));
  // u = tau^2, w = b6 tau^6 + ... : the printed dual shape
  CHECK(*d.branches[0].dual.series.valuation() == 6);
}

TEST_CASE("non-generic stratum: s = m1/n1 shifts the first pair") {
  auto Q = Tower::rationals();
  // x = t^3, y = t^5: pairs {(5,3)}, dual pairs should be {(5,2)}
  MultiPoly f = curve(Q, "y^3-x^5");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), 0, tb);
  REQUIRE(br.size() == 1);
  auto db = dual_branch(br[0], tb);
  REQUIRE(db.dual_invariants.pairs.size() == 1);
  CHECK(db.dual_invariants.pairs[0] == std::pair<int, int>(5, 2));
}

TEST_CASE("dual of a cusp is a flex of order one") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "y^2-x^3");
  TowerBuilder tb(Q);
  auto br = newton_puiseux(f, origin(), 0, tb);
  REQUIRE(br.size() == 1);
  auto db = dual_branch(br[0], tb);
  CHECK(db.dual.ram == 1);
  CHECK(db.dual_invariants.pairs.empty());
  CHECK(*db.dual.series.valuation() == 3); // w ~ u^3: flex of order 1
  // biduality: the dual of the flex branch is the cusp again
  auto dd = dual_branch(db.dual, tb);
  REQUIRE(dd.dual_invariants.pairs.size() == 1);
  CHECK(dd.dual_invariants.pairs[0] == std::pair<int, int>(3, 2));
}

TEST_CASE("biduality on corpus branches") {
  auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
  MultiPoly f = parse_multipoly(
      tw, XY,
      "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
  TowerBuilder tb(tw);
  auto br = newton_puiseux(f, origin(), 0, tb);
  for (auto& b : br) {
    PuiseuxBranch s = standard_form(b, tb);
    auto inv = puiseux_invariants(s);
    auto db = dual_branch(s, tb);
    auto dd = dual_branch(db.dual, tb);
    CHECK(dd.dual_invariants.pairs == inv.pairs);
    CHECK(dd.dual_invariants.order == inv.order);
  }
}

TEST_CASE("self-duality instances (generic stratum representatives)") {
  auto Q = Tower::rationals();
  SUBCASE("tangential A-singularities") {
    CHECK(dual_label0(curve(Q, "(y-x^2)*(y-x^2-x^3)")) == "A5");
    CHECK(dual_label0(curve(Q, "(y-x^2)*(y-x^2-x^6)")) == "A11");
    CHECK(dual_label0(curve(Q, "(y-x^2)*(y-x^2-x^9)")) == "A17");
    CHECK(dual_label0(curve(Q, "(y-x^2)^2-x^9")) == "A8");
    CHECK(dual_label0(curve(Q, "(y-x^2)^2-x^15")) == "A14");
  }
  SUBCASE("B(3,2m) for m = 3..6") {
    CHECK(dual_label0(curve(Q, "(y-x^2)*(y-2*x^2)*(y-3*x^2)")) == "B(3,6)");
    CHECK(dual_label0(curve(Q, "(y-x^2)^3-x^8")) == "B(3,8)");
    CHECK(dual_label0(curve(Q, "(y-x^2)^3-x^10")) == "B(3,10)");
    CHECK(dual_label0(
              curve(Q, "(y-x^2-x^4)*(y-x^2-2*x^4)*(y-x^2-3*x^4)")) ==
          "B(3,12)");
  }
  SUBCASE("C(3,n) germs straight from the corpus curves") {
    auto tw3 = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
    MultiPoly cex = parse_multipoly(
        tw3, XY,
        "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
    TowerBuilder tb1(tw3);
    auto rep = classify0(cex, tb1);
    REQUIRE(rep.label == "C(3,9)");
    CHECK(dual_singularity_type(rep, tb1).label == "C(3,9)");

    auto tw2 = Tower::rationals()->extend("sqrt2", 2, {Rat(2)}, cplx(1.414, 0));
    MultiPoly cvi = parse_multipoly(
        tw2, XY, "(y-x^2)^3 + (3*sqrt2/4*y*x + 2*y^3 - 3*sqrt2/4*x^3)^2");
    TowerBuilder tb2(tw2);
    auto rep2 = classify0(cvi, tb2);
    REQUIRE(rep2.label == "C(3,15)");
    CHECK(dual_singularity_type(rep2, tb2).label == "C(3,15)");
  }
  SUBCASE("B(4,6) dualizes to A5 (cusp components become flexes)") {
    MultiPoly f = curve(Q, "y^4+x^6");
    TowerBuilder tb(Q);
    auto rep = classify0(f, tb);
    REQUIRE(rep.label == "B(4,6)");
    auto d = dual_singularity_type(rep, tb);
    CHECK(d.label == "A5");
    CHECK(d.intersections[0][1] == 3);
  }
}

TEST_CASE("intersection numbers survive dualization in the generic stratum") {
  auto tw = Tower::rationals()->extend("sqrt2", 2, {Rat(2)}, cplx(1.414, 0));
  MultiPoly f = parse_multipoly(
      tw, XY, "(y-x^2)^3 + (3*sqrt2/4*y*x + 2*y^3 - 3*sqrt2/4*x^3)^2");
  TowerBuilder tb(tw);
  auto rep = classify0(f, tb);
  REQUIRE(rep.branches.size() == 2);
  CHECK(rep.intersections[0][1] == 4);
  auto d = dual_singularity_type(rep, tb);
  CHECK(d.intersections[0][1] == 4);
}

TEST_CASE("dual degrees of low-degree classics") {
  auto Q = Tower::rationals();
  // smooth conic: dual degree 2
  CHECK(dual_degree(curve(Q, "y-x^2")) == 2);
  CHECK(dual_degree(curve(Q, "x^2+y^2-1")) == 2);
  // cuspidal cubic: dual degree 3; nodal cubic: dual degree 4
  CHECK(dual_degree(curve(Q, "y^2-x^3")) == 3);
  CHECK(dual_degree(curve(Q, "y^2-x^2*(x+1)")) == 4);
  // smooth cubic: 6
  CHECK(dual_degree(curve(Q, "y^2-x^3+x-7")) == 6);
}
