#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvetopo/singularity.hpp"

using namespace curvetopo;

namespace {

const std::vector<std::string> XY = {"x", "y"};

MultiPoly curve(const TowerPtr& tw, const std::string& text) {
  return parse_multipoly(tw, XY, text);
}

std::vector<AlgNum> pt(const Rat& x, const Rat& y) {
  return {AlgNum(x), AlgNum(y)};
}

std::string classify_at(const MultiPoly& f, const std::vector<AlgNum>& p) {
  TowerBuilder tb(f.terms().empty() ? Tower::rationals()
                                    : f.terms().begin()->second.tower());
  return classify_singularity(f, p, tb).label;
}

} // namespace

TEST_CASE("find_singular_points") {
  auto Q = Tower::rationals();
  SUBCASE("sextic with B(3,10) at O and a cusp on a rational point") {
    MultiPoly f = curve(
        Q, "(y*(1-y)-x^2)^3 + (y^2*(1-y)-x^2*y+x*y^2+18/25*y^3)^2");
    auto pts = find_singular_points(f);
    std::vector<SingularPoint> affine;
    for (auto& p : pts)
      if (!p.at_infinity) affine.push_back(p);
    REQUIRE(affine.size() == 2);
    // sorted by nothing in particular; find them
    bool have_origin = false, have_cusp = false;
    for (auto& p : affine) {
      REQUIRE(p.exact);
      if (p.coords[0] == AlgNum() && p.coords[1] == AlgNum())
        have_origin = true;
      if (p.coords[0] == AlgNum(rat_of(-450, 949)) &&
          p.coords[1] == AlgNum(rat_of(625, 949)))
        have_cusp = true;
    }
    CHECK(have_origin);
    CHECK(have_cusp);
  }
  SUBCASE("sextic with E6 at (0,2)") {
    MultiPoly f = curve(Q, "((y-1)^2+x^2-1)^3+x^4*y^2");
    auto pts = find_singular_points(f);
    int affine = 0;
    bool have_e6 = false;
    for (auto& p : pts)
      if (!p.at_infinity) {
        ++affine;
        if (p.exact && p.coords[0] == AlgNum() && p.coords[1] == AlgNum(2L))
          have_e6 = true;
      }
    CHECK(affine == 2);
    CHECK(have_e6);
  }
  SUBCASE("smooth conic has no singular points") {
    MultiPoly f = curve(Q, "y-x^2");
    auto pts = find_singular_points(f);
    for (auto& p : pts) CHECK(p.at_infinity);
  }
}

TEST_CASE("intersection numbers") {
  auto Q = Tower::rationals();
  TowerBuilder tb(Q);
  SUBCASE("two tangential smooth branches with a2 != a2'") {
    MultiPoly f = curve(Q, "(y-x^2)*(y-2*x^2)");
    auto br = newton_puiseux(f, pt(0, 0), 0, tb);
    REQUIRE(br.size() == 2);
    CHECK(intersection_number(br[0], br[1], tb) == 2);
    CHECK(intersection_number(br[1], br[0], tb) == 2);
  }
  SUBCASE("transverse smooth branches") {
    MultiPoly f = curve(Q, "y*(y-x)");
    auto br = newton_puiseux(f, pt(0, 0), 0, tb);
    REQUIRE(br.size() == 2);
    CHECK(intersection_number(br[0], br[1], tb) == 1);
  }
  SUBCASE("L and K of a C(3,9) germ") {
    auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
    MultiPoly f = parse_multipoly(
        tw, XY,
        "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
    TowerBuilder tb3(tw);
    auto br = newton_puiseux(f, pt(0, 0), 0, tb3);
    REQUIRE(br.size() == 2);
    CHECK(intersection_number(br[0], br[1], tb3) == 4);
  }
}

TEST_CASE("classification of normal forms") {
  auto Q = Tower::rationals();
  CHECK(classify_at(curve(Q, "y^2-x^3"), pt(0, 0)) == "A2");
  CHECK(classify_at(curve(Q, "y^2-x^5"), pt(0, 0)) == "A4");
  CHECK(classify_at(curve(Q, "y^2+x^9"), pt(0, 0)) == "A8");
  CHECK(classify_at(curve(Q, "y^2-x^2+x^3"), pt(0, 0)) == "A1");
  CHECK(classify_at(curve(Q, "y^2-x^4+x^5"), pt(0, 0)) == "A3");
  CHECK(classify_at(curve(Q, "y^2-x^6+x^7"), pt(0, 0)) == "A5");
  CHECK(classify_at(curve(Q, "y^3+x^4"), pt(0, 0)) == "E6");
  CHECK(classify_at(curve(Q, "y^3+x^6"), pt(0, 0)) == "B(3,6)");
  CHECK(classify_at(curve(Q, "y^3+x^8"), pt(0, 0)) == "B(3,8)");
  CHECK(classify_at(curve(Q, "y^3+x^10"), pt(0, 0)) == "B(3,10)");
  CHECK(classify_at(curve(Q, "y^3+x^12"), pt(0, 0)) == "B(3,12)");
  CHECK(classify_at(curve(Q, "y^4+x^6"), pt(0, 0)) == "B(4,6)");
  CHECK(classify_at(curve(Q, "(y^2-x^3)^2+(x*y)^3"), pt(0, 0)) == "Sp1");
  for (int q : {7, 8, 9, 12, 15}) {
    std::string form = "y^3+x^" + std::to_string(q) + "+x^2*y^2";
    CHECK(classify_at(curve(Q, form), pt(0, 0)) ==
          "C(3," + std::to_string(q) + ")");
  }
  CHECK(classify_at(curve(Q, "y^9+x^9+x^2*y^2"), pt(0, 0)) == "C(9,9)");
  CHECK(classify_at(curve(Q, "y^6+x^6+x^2*y^2"), pt(0, 0)) == "C(6,6)");
  CHECK(classify_at(curve(Q, "y^6+x^9+x^2*y^2"), pt(0, 0)) == "C(6,9)");
  CHECK(classify_at(curve(Q, "y^6+x^12+x^2*y^2"), pt(0, 0)) == "C(6,12)");
}

TEST_CASE("classification of the corpus germs") {
  auto Q = Tower::rationals();
  SUBCASE("B(3,10) sextic") {
    MultiPoly f = curve(
        Q, "(y*(1-y)-x^2)^3 + (y^2*(1-y)-x^2*y+x*y^2+18/25*y^3)^2");
    CHECK(classify_at(f, pt(0, 0)) == "B(3,10)");
    CHECK(classify_at(f, pt(rat_of(-450, 949), rat_of(625, 949))) == "A2");
  }
  SUBCASE("Sp1 sextic") {
    MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
    CHECK(classify_at(f, pt(0, 0)) == "Sp1");
    CHECK(classify_at(f, pt(0, 1)) == "A2");
  }
  SUBCASE("B(3,8) + E6 sextic") {
    MultiPoly f = curve(Q, "((y-1)^2+x^2-1)^3+x^4*y^2");
    CHECK(classify_at(f, pt(0, 0)) == "B(3,8)");
    CHECK(classify_at(f, pt(0, 2)) == "E6");
  }
  SUBCASE("C(3,7) + A8 sextic") {
    MultiPoly f = curve(
        Q,
        "(y*(2*y-2)-x^2)^3 + (46079/54000*x^3 + 152279/18000*x^2*y + "
        "(311579/18000*y^2 - 59/10*y)*x - 2351327/54000*y^3 + "
        "178829/4500*y^2)^2");
    CHECK(classify_at(f, pt(0, 0)) == "C(3,7)");
    CHECK(classify_at(f, pt(2, 2)) == "A8");
  }
  SUBCASE("double cover C(9,9) sextic") {
    MultiPoly f =
        curve(Q, "(y^2-x^2)^3 + (2*y^2-2*x^2+32/27*x^3)^2");
    CHECK(classify_at(f, pt(0, 0)) == "C(9,9)");
  }
  SUBCASE("symmetric C(3,15) sextic") {
    auto tw = Tower::rationals()->extend("sqrt2", 2, {Rat(2)}, cplx(1.414, 0));
    MultiPoly f = parse_multipoly(
        tw, XY, "(y-x^2)^3 + (3*sqrt2/4*y*x + 2*y^3 - 3*sqrt2/4*x^3)^2");
    TowerBuilder tb(tw);
    CHECK(classify_singularity(f, pt(0, 0), tb).label == "C(3,15)");
  }
  SUBCASE("exceptional C(3,9) sextic") {
    auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
    MultiPoly f = parse_multipoly(
        tw, XY,
        "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
    TowerBuilder tb(tw);
    CHECK(classify_singularity(f, pt(0, 0), tb).label == "C(3,9)");
  }
}

TEST_CASE("discriminant defect accounts for printed multiplicities") {
  auto Q = Tower::rationals();
  SUBCASE("Sp1 sextic: y^23 at the origin level") {
    MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
    TowerBuilder tb(Q);
    auto rep = classify_singularity(f, pt(0, 0), tb);
    CHECK(rep.milnor == 18);
    CHECK(discriminant_defect(f, rep, 1) == 23);
    auto rep2 = classify_singularity(f, pt(0, 1), tb);
    CHECK(discriminant_defect(f, rep2, 1) == 4); // (y-1)^4 in the printed form
  }
  SUBCASE("B(3,8)+E6: y^19 and (y-2)^9") {
    MultiPoly f = curve(Q, "((y-1)^2+x^2-1)^3+x^4*y^2");
    TowerBuilder tb(Q);
    auto rep = classify_singularity(f, pt(0, 0), tb);
    CHECK(discriminant_defect(f, rep, 1) == 19);
    auto rep2 = classify_singularity(f, pt(0, 2), tb);
    CHECK(discriminant_defect(f, rep2, 1) == 9);
  }
}

TEST_CASE("local braids") {
  auto Q = Tower::rationals();
  SUBCASE("smooth transverse point: trivial") {
    MultiPoly f = curve(Q, "y-x");
    TowerBuilder tb(Q);
    auto rep = classify_singularity(f, pt(0, 0), tb);
    auto b = local_braid(f, rep, 1);
    CHECK(b.letters.empty());
  }
  SUBCASE("A1 node: full twist sigma^2 and the commuting relation") {
    MultiPoly f = curve(Q, "y^2-x^2+x^3");
    TowerBuilder tb(Q);
    auto rep = classify_singularity(f, pt(0, 0), tb);
    // pencil x: the two y-branches wind once around each other
    auto b = local_braid(f, rep, 0, 1e-2);
    auto r = b.reduced();
    REQUIRE(r.letters.size() == 2);
    CHECK(r.letters[0] == r.letters[1]);
    // induced relations: g1 g2 = g2 g1
    auto rels = braid_relations(r);
    REQUIRE(!rels.empty());
    Word comm = word_parse("g1 g2 g1' g2'", {"g1", "g2"});
    bool found = false;
    for (auto& rel : rels)
      if (word_cyclic_canon(rel) == word_cyclic_canon(comm)) found = true;
    CHECK(found);
  }
  SUBCASE("A2 cusp: sigma^3 and the braid relation") {
    MultiPoly f = curve(Q, "y^2-x^3");
    TowerBuilder tb(Q);
    auto rep = classify_singularity(f, pt(0, 0), tb);
    auto b = local_braid(f, rep, 0, 1e-2);
    auto r = b.reduced();
    REQUIRE(r.letters.size() == 3);
    CHECK(r.letters[0] == r.letters[1]);
    CHECK(r.letters[1] == r.letters[2]);
    auto rels = braid_relations(r);
    Word braidw = word_parse("g1 g2 g1 g2' g1' g2'", {"g1", "g2"});
    bool found = false;
    for (auto& rel : rels)
      if (word_cyclic_canon(rel) == word_cyclic_canon(braidw)) found = true;
    CHECK(found);
  }
}
