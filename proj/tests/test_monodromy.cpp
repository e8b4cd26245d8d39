#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "curvetopo/groups.hpp"
#include "curvetopo/monodromy.hpp"
#include "curvetopo/singularity.hpp"

using namespace curvetopo;

namespace {

const std::vector<std::string> XY = {"x", "y"};

MultiPoly curve(const TowerPtr& tw, const std::string& text) {
  return parse_multipoly(tw, XY, text);
}

} // namespace

TEST_CASE("critical pencil values") {
  auto Q = Tower::rationals();
  SUBCASE("exceptional sextic: {-9/4, -3/2, 0, 3/4}") {
    auto tw = Tower::rationals()->extend("sqrt3", 2, {Rat(3)}, cplx(1.732, 0));
    MultiPoly f = parse_multipoly(
        tw, XY,
        "(y-x^2)^3 + (y^2+4/3*y^3+3*sqrt3/2*x*y+2*sqrt3/3*x*y^2+2*x^2*y)^2");
    auto crit = critical_pencil_values(f, 1);
    REQUIRE(crit.size() == 4);
    std::vector<Rat> expected = {rat_of(-9, 4), rat_of(-3, 2), Rat(0),
                                 rat_of(3, 4)};
    for (size_t i = 0; i < 4; ++i) {
      REQUIRE(crit[i].exact.has_value());
      CHECK(crit[i].exact->rat_value() == expected[i]);
    }
  }
  SUBCASE("Sp1 sextic: {0, 1, 4/3}") {
    MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
    auto crit = critical_pencil_values(f, 1);
    REQUIRE(crit.size() == 3);
    std::vector<Rat> expected = {Rat(0), Rat(1), rat_of(4, 3)};
    for (size_t i = 0; i < 3; ++i) {
      REQUIRE(crit[i].exact.has_value());
      CHECK(crit[i].exact->rat_value() == expected[i]);
    }
  }
  SUBCASE("parabola: {0}") {
    MultiPoly f = curve(Q, "y-x^2");
    auto crit = critical_pencil_values(f, 1);
    REQUIRE(crit.size() == 1);
    CHECK(crit[0].exact->rat_value() == Rat(0));
  }
}

TEST_CASE("tracking the parabola loop gives sigma_1") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "x^2-y");
  auto res = braid_monodromy(f, 1);
  REQUIRE(res.braids.size() == 1);
  BraidWord b = res.braids[0].reduced();
  REQUIRE(b.letters.size() == 1);
  CHECK(std::abs(b.letters[0]) == 1);
  CHECK(b.letters[0] == 1); // counterclockwise loop, positive half twist
  // permutation is the transposition
  CHECK(b.permutation() == std::vector<int>{1, 0});
  CHECK(big_circle_consistent(res));
}

TEST_CASE("smooth conic: projective group Z/2") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "x^2-y");
  auto res = braid_monodromy(f, 1);
  AbelianGroup h = abelianize(res.projective);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<Int>{Int(2)});
  auto t = tietze_simplify(res.projective);
  // <g | g^2> after reduction
  CHECK(t.pres.num_gens() == 1);
  REQUIRE(t.pres.relators.size() == 1);
  CHECK((int)t.pres.relators[0].size() == 2);
}

TEST_CASE("Sp1 sextic loop around y=1: local sigma^3 braid relation") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
  auto res = braid_monodromy(f, 1);
  // find the loop around the critical value 1
  int idx = -1;
  for (size_t k = 0; k < res.setup.critical.size(); ++k)
    if (res.setup.critical[k].exact &&
        res.setup.critical[k].exact->rat_value() == Rat(1))
      idx = (int)k;
  REQUIRE(idx >= 0);
  BraidWord b = res.braids[(size_t)idx].reduced();
  // conjugated sigma^3 on one adjacent pair: writhe 3, permutation a
  // transposition
  CHECK(b.writhe() == 3);
  auto perm = b.permutation();
  int moved = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != (int)i) ++moved;
  CHECK(moved == 2);
  // cross-check against the series-based local braid of the A2 there
  TowerBuilder tb(Q);
  auto rep = classify_singularity(f, {AlgNum(), AlgNum(1L)}, tb);
  REQUIRE(rep.label == "A2");
  auto lb = local_braid(f, rep, 1, 1e-2);
  CHECK(lb.reduced().writhe() == 3);
  CHECK(big_circle_consistent(res));
}

TEST_CASE("B(3,10) sextic: permutation at y=0 is a 6-cycle") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(
      Q, "(y*(1-y)-x^2)^3 + (y^2*(1-y)-x^2*y+x*y^2+18/25*y^3)^2");
  auto res = braid_monodromy(f, 1);
  int idx = -1;
  for (size_t k = 0; k < res.setup.critical.size(); ++k)
    if (res.setup.critical[k].exact &&
        res.setup.critical[k].exact->rat_value() == Rat(0))
      idx = (int)k;
  REQUIRE(idx >= 0);
  auto perm = res.braids[(size_t)idx].permutation();
  // orbit structure of one 6-cycle
  std::vector<char> seen(perm.size(), 0);
  int cycle = 0, cur = 0;
  do {
    seen[(size_t)cur] = 1;
    cur = perm[(size_t)cur];
    ++cycle;
  } while (!seen[(size_t)cur]);
  CHECK(cycle == 6);
  CHECK(big_circle_consistent(res));
}

TEST_CASE("projection invariance of the induced presentation") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
  auto res = braid_monodromy(f, 1);
  // braids under a second projection give the same reduced group data
  std::vector<BraidWord> braids2;
  for (auto& tr : res.traces) braids2.push_back(braid_word(tr, 1.9));
  GroupPresentation p2 = van_kampen(braids2, 6, true);
  AbelianGroup h1 = abelianize(res.projective), h2 = abelianize(p2);
  CHECK(h1 == h2);
  CHECK(milnor_betti(res.projective) == milnor_betti(p2));
}

TEST_CASE("reducible symmetric sextic splits into two orbits") {
  auto tw = Tower::rationals()->extend("sqrt2", 2, {Rat(2)}, cplx(1.414, 0));
  // t = 1 member of the symmetric family: a line plus a quintic; the
  // horizontal-line component forces the transverse pencil x = const
  MultiPoly f = parse_multipoly(
      tw, XY, "(y-x^2)^3 + (y*x + 2*y^3 - x^3)^2");
  auto res = braid_monodromy(f, 0, std::nullopt, -1);
  // total permutation group orbit count = number of components = 2
  int d = 6;
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (auto& b : res.braids) {
    auto perm = b.permutation();
    for (int i = 0; i < d; ++i) {
      int a = find(i), bb = find(perm[(size_t)i]);
      if (a != bb) parent[a] = bb;
    }
  }
  std::set<int> roots;
  for (int i = 0; i < d; ++i) roots.insert(find(i));
  CHECK(roots.size() == 2);
}

TEST_CASE("irreducible corpus sextic: transitive action and H1 = Z/6") {
  auto Q = Tower::rationals();
  MultiPoly f = curve(Q, "(y^2-y^3-x^3)^2-x^3*y^3");
  auto res = braid_monodromy(f, 1);
  AbelianGroup ha = abelianize(res.affine);
  CHECK(ha.free_rank == 1);
  CHECK(ha.torsion.empty());
  AbelianGroup hp = abelianize(res.projective);
  CHECK(hp.free_rank == 0);
  CHECK(hp.torsion == std::vector<Int>{Int(6)});
}
