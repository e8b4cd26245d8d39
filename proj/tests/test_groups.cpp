#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvetopo/groups.hpp"

using namespace curvetopo;

namespace {

GroupPresentation make(std::vector<std::string> gens,
                       std::vector<std::string> rels) {
  GroupPresentation p;
  p.gens = std::move(gens);
  for (auto& r : rels) p.relators.push_back(word_parse(r, p.gens));
  return p;
}

GroupPresentation z2z3() { return make({"a", "b"}, {"a a", "b b b"}); }

GroupPresentation braid3() { return make({"x", "y"}, {"x y x Y X Y"}); }

// the exceptional sextic's printed presentations
GroupPresentation cex_affine() {
  return make({"x", "y", "z"},
              {"x y x Y X Y", "x z x Z X Z", "y z y Z Y Z",
               "z y x z y x X Z Y X Z Y", "z y x z y x Y X Z Y X Z"});
}
GroupPresentation cex_projective() {
  return make({"x", "y", "z"},
              {"x y x Y X Y", "x z x Z X Z", "y z y Z Y Z", "z y x z y x"});
}

GroupPresentation b4p1_pres() {
  return make({"g1", "g2", "g3"},
              {"g1 g3 g1' g3'", "g1 g2 g1 g2' g1' g2'", "g2 g3 g2 g3' g2' g3'",
               "g1 g2 g3 g3 g2 g1"});
}

} // namespace

TEST_CASE("abelianization") {
  AbelianGroup h = abelianize(z2z3());
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<Int>{Int(6)});
  AbelianGroup f = abelianize(make({"g"}, {}));
  CHECK(f.free_rank == 1);
  CHECK(f.torsion.empty());
  AbelianGroup ha = abelianize(cex_affine());
  CHECK(ha.free_rank == 1);
  CHECK(ha.torsion.empty());
  AbelianGroup hp = abelianize(cex_projective());
  CHECK(hp.free_rank == 0);
  CHECK(hp.torsion == std::vector<Int>{Int(6)});
}

TEST_CASE("fox calculus and Alexander polynomials") {
  SUBCASE("braid group B(3): generic Alexander polynomial") {
    auto ax = fox_alexander(braid3(), {1, 1});
    REQUIRE(!ax.delta.empty());
    CHECK(ax.delta[0] == parse_lpoly("t^2-t+1"));
  }
  SUBCASE("free group of rank 1") {
    auto ax = fox_alexander(make({"g"}, {}), {1});
    REQUIRE(!ax.delta.empty());
    CHECK(ax.delta[0] == LPoly::one());
  }
  SUBCASE("exceptional sextic: (t^2-t+1)^2 and t^2-t+1") {
    auto ax = fox_alexander(cex_affine(), {1, 1, 1});
    REQUIRE(ax.delta.size() >= 2);
    CHECK(ax.delta[0] == parse_lpoly("(t^2-t+1)^2"));
    CHECK(ax.delta[1] == parse_lpoly("t^2-t+1"));
    // divisibility chain is visible in the normalized values
  }
  SUBCASE("fox identity on every relator of the corpus presentations") {
    for (auto& p : {z2z3(), braid3(), cex_affine(), cex_projective(),
                    b4p1_pres()}) {
      std::vector<int> w((size_t)p.num_gens(), 1);
      // a2,b3 does not satisfy all-ones augmentation; identity holds anyway
      for (auto& r : p.relators) CHECK(fox_identity_holds(r, w));
    }
  }
}

TEST_CASE("reidemeister-schreier kernels") {
  SUBCASE("commutator subgroup of Z2*Z3 is free of rank 2") {
    GroupPresentation p = z2z3();
    auto k = kernel_presentation(p, 6, {3, 2});
    // raw Schreier size bookkeeping
    CHECK(k.num_gens() == 6 * 2 - 6 + 1);
    CHECK((int)k.relators.size() == 6 * 2);
    auto t = tietze_simplify(k);
    CHECK(t.pres.num_gens() == 2);
    CHECK(t.pres.relators.empty());
  }
  SUBCASE("Z -> Z/6 kernel is Z") {
    auto k = kernel_presentation(make({"g"}, {}), 6, {1});
    auto t = tietze_simplify(k);
    CHECK(t.pres.num_gens() == 1);
    CHECK(t.pres.relators.empty());
  }
  SUBCASE("exceptional sextic: H1(M;Z) = Z^4") {
    auto k = kernel_presentation(cex_projective(), 6, {1, 1, 1});
    CHECK(k.num_gens() == 6 * 3 - 6 + 1);
    CHECK((int)k.relators.size() == 6 * 4);
    AbelianGroup h = abelianize(k);
    CHECK(h.free_rank == 4);
    CHECK(h.torsion.empty());
  }
  SUBCASE("schreier rank formula on a random-ish sample") {
    GroupPresentation p = cex_affine();
    for (int n : {2, 3, 6}) {
      auto k = kernel_presentation(p, n, {1, 1, 1});
      CHECK(k.num_gens() == n * 3 - n + 1);
      CHECK((int)k.relators.size() == n * (int)p.relators.size());
    }
  }
}

TEST_CASE("milnor betti numbers") {
  CHECK(milnor_betti(z2z3()) == 2);
  CHECK(milnor_betti(cex_projective()) == 4);
}

TEST_CASE("tietze simplification") {
  SUBCASE("generator defined by a relator is eliminated") {
    auto p = make({"g1", "g2", "g3", "g4"},
                  {"g4 g3'", "g1 g2 g1 g2' g1' g2'", "g4 g1 g4' g2'"});
    auto t = tietze_simplify(p);
    CHECK(t.pres.num_gens() == 2);
  }
  SUBCASE("delta and abelianization invariant under simplification") {
    GroupPresentation p = cex_affine();
    auto before = fox_alexander(p, {1, 1, 1});
    auto t = tietze_simplify(p);
    AbelianGroup h1 = abelianize(p), h2 = abelianize(t.pres);
    CHECK(h1 == h2);
    std::vector<int> w((size_t)t.pres.num_gens(), 1);
    auto after = fox_alexander(t.pres, w);
    REQUIRE(!after.delta.empty());
    CHECK(before.delta[0] == after.delta[0]);
  }
  SUBCASE("transcripts replay to the same presentation") {
    GroupPresentation p = cex_projective();
    auto t = tietze_simplify(p);
    GroupPresentation r = tietze_replay(p, t.steps);
    CHECK(same_presentation(r, t.pres));
  }
}

TEST_CASE("homomorphism counting") {
  std::vector<std::vector<int>> s3 = {{1, 0, 2}, {1, 2, 0}};
  CHECK(perm_group_elements(s3).size() == 6);
  CHECK(count_homomorphisms(z2z3(), s3) == 12); // 4 involutions+e x 3 cubes
  std::vector<std::vector<int>> triv = {{0}};
  CHECK(count_homomorphisms(z2z3(), triv) == 1);
  // closed form: (#order | 2) * (#order | 3) over several targets
  std::vector<std::vector<std::vector<int>>> targets = {
      s3,
      {{1, 0, 2, 3}, {1, 2, 3, 0}},  // S4
      {{1, 2, 0, 3}, {1, 3, 2, 0}},  // A4
  };
  for (auto& t : targets) {
    auto elems = perm_group_elements(t);
    auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> r(a.size());
      for (size_t i = 0; i < a.size(); ++i) r[i] = a[(size_t)b[i]];
      return r;
    };
    long inv2 = 0, ord3 = 0;
    for (auto& e : elems) {
      if (mul(e, e) == elems[0] || e == elems[0]) {
        // identity is elems[0] only by luck of ordering; recompute
      }
    }
    std::vector<int> id(elems[0].size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = (int)i;
    for (auto& e : elems) {
      if (mul(e, e) == id) ++inv2;
      if (mul(e, mul(e, e)) == id) ++ord3;
    }
    CHECK(count_homomorphisms(z2z3(), t) == inv2 * ord3);
  }
}

TEST_CASE("word triviality search certifies the (xyx)^2 variant") {
  Word braid = word_parse("x y x Y X Y", {"x", "y"});
  Word xyx2 = word_parse("x y x x y x", {"x", "y"});
  Word xy3 = word_parse("x y x y x y", {"x", "y"});
  CHECK(word_trivial_in(xy3, {braid, xyx2}));
  CHECK(word_trivial_in(xyx2, {braid, xy3}));
}

TEST_CASE("recognition verdicts") {
  SUBCASE("already-reduced Z2*Z3 forms") {
    CHECK(recognize(z2z3()).verdict == Verdict::PROVED_Z2_STAR_Z3);
    auto vii = make({"r", "s"}, {"r s r S R S", "s r s s r s"});
    // the C_VII hand reduction: braid plus (xyx)^2
    CHECK(recognize(vii).verdict == Verdict::PROVED_Z2_STAR_Z3);
  }
  SUBCASE("affine braid group") {
    CHECK(recognize(braid3()).verdict == Verdict::PROVED_B3);
  }
  SUBCASE("B4(P1)") {
    auto r = recognize(b4p1_pres());
    CHECK(r.verdict == Verdict::PROVED_B4P1);
  }
  SUBCASE("exceptional sextic is distinguished, not inconclusive") {
    auto r = recognize(cex_projective());
    CHECK(r.verdict == Verdict::DISTINGUISHED);
    REQUIRE(!r.certificate.empty());
    auto ra = recognize(cex_affine());
    CHECK(ra.verdict == Verdict::DISTINGUISHED);
  }
  SUBCASE("replaying the recognition transcript") {
    auto r = recognize(cex_projective());
    GroupPresentation replayed = tietze_replay(cex_projective(), r.tietze_steps);
    CHECK(same_presentation(replayed, r.reduced));
  }
}

TEST_CASE("B4(P1) vs Z2*Z3: a finite target distinguishes them") {
  std::vector<std::vector<int>> s4 = {{1, 0, 2, 3}, {1, 2, 3, 0}};
  long cb = count_homomorphisms(b4p1_pres(), s4);
  long cz = count_homomorphisms(z2z3(), s4);
  CHECK(cb != cz);
  CHECK(cz == 90); // 10 involutions-with-identity times 9 order-3s
}
