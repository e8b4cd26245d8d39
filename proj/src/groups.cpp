#include "curvetopo/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace curvetopo {

AbelianGroup abelianize(const GroupPresentation& p) {
  return abelianize_with_classes(p, nullptr);
}

AbelianGroup abelianize_with_classes(const GroupPresentation& p,
                                     std::vector<std::vector<Int>>* classes) {
  IMat rel;
  for (auto& r : p.relators) {
    std::vector<Int> row((size_t)p.num_gens(), Int(0));
    for (int x : r) row[(size_t)(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    rel.push_back(std::move(row));
  }
  return cokernel_with_classes(rel, p.num_gens(), classes);
}

// ---------------------------------------------------------------------------

AlexanderData fox_alexander(const GroupPresentation& p,
                            const std::vector<int>& weights) {
  if ((int)weights.size() != p.num_gens())
    fail(errc::invalid_input, "weight arity mismatch");
  for (auto& r : p.relators) {
    long s = 0;
    for (int x : r) s += (x > 0 ? 1 : -1) * weights[(size_t)(std::abs(x) - 1)];
    if (s != 0)
      fail(errc::invalid_input,
           "augmentation does not factor through abelianization");
  }
  AlexanderData out;
  for (auto& r : p.relators) {
    std::vector<LPoly> row((size_t)p.num_gens());
    long e = 0;
    for (int x : r) {
      int g = std::abs(x) - 1;
      if (x > 0) {
        row[(size_t)g].add((int)e, Rat(1));
        e += weights[(size_t)g];
      } else {
        e -= weights[(size_t)g];
        row[(size_t)g].add((int)e, Rat(-1));
      }
    }
    out.matrix.push_back(std::move(row));
  }
  int n = p.num_gens();
  std::vector<LPoly> diag;
  if (!out.matrix.empty()) diag = smith_laurent(out.matrix);
  // Delta_i = product of the first (n - i) invariant factors
  for (int i = 1; i <= n; ++i) {
    int k = n - i;
    if (k == 0) {
      out.delta.push_back(LPoly::one());
      continue;
    }
    if (k > (int)diag.size()) {
      out.delta.push_back(LPoly()); // zero: not enough rank
      continue;
    }
    LPoly prod = LPoly::one();
    bool zero = false;
    for (int j = 0; j < k; ++j) {
      if (diag[(size_t)j].is_zero()) { zero = true; break; }
      prod = prod * diag[(size_t)j];
    }
    out.delta.push_back(zero ? LPoly() : alexander_normalize(prod));
  }
  return out;
}

bool fox_identity_holds(const Word& w, const std::vector<int>& weights) {
  // sum_i dw/dg_i * (t^{k_i} - 1) == t^{e(w)} - 1
  LPoly lhs;
  long e = 0;
  for (int x : w) {
    int g = std::abs(x) - 1;
    LPoly factor = LPoly::term(Rat(1), weights[(size_t)g]) - LPoly::one();
    if (x > 0) {
      lhs = lhs + LPoly::term(Rat(1), (int)e) * factor;
      e += weights[(size_t)g];
    } else {
      e -= weights[(size_t)g];
      lhs = lhs - LPoly::term(Rat(1), (int)e) * factor;
    }
  }
  LPoly rhs = LPoly::term(Rat(1), (int)e) - LPoly::one();
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

GroupPresentation kernel_presentation(const GroupPresentation& p, int order,
                                      const std::vector<int>& weights) {
  if (order < 1) fail(errc::invalid_input, "kernel index must be positive");
  if ((int)weights.size() != p.num_gens())
    fail(errc::invalid_input, "weight arity mismatch");
  for (auto& r : p.relators) {
    long s = 0;
    for (int x : r) s += (x > 0 ? 1 : -1) * weights[(size_t)(std::abs(x) - 1)];
    if (((s % order) + order) % order != 0)
      fail(errc::invalid_input, "map is not well defined on relators");
  }
  {
    long g = order;
    for (int w : weights) g = std::gcd(g, (long)((w % order + order) % order));
    if (g != 1 && order > 1)
      fail(errc::invalid_input, "map to the cyclic group is not surjective");
  }
  int n = p.num_gens();
  auto step = [&](int coset, int letter) {
    int g = std::abs(letter) - 1;
    int k = weights[(size_t)g] % order;
    int c = letter > 0 ? coset + k : coset - k;
    return ((c % order) + order) % order;
  };
  // Schreier transversal by BFS over cosets (letter 0 marks the root)
  std::vector<int> tree_letter(order, 0), tree_from(order, -1);
  std::vector<char> visited((size_t)order, 0);
  visited[0] = 1;
  std::vector<int> bfs{0};
  for (size_t h = 0; h < bfs.size(); ++h) {
    int c = bfs[h];
    for (int g = 1; g <= n; ++g)
      for (int sgn : {+1, -1}) {
        int d = step(c, sgn * g);
        if (!visited[(size_t)d]) {
          visited[(size_t)d] = 1;
          tree_letter[(size_t)d] = sgn * g;
          tree_from[(size_t)d] = c;
          bfs.push_back(d);
        }
      }
  }
  for (int c = 0; c < order; ++c)
    if (!visited[(size_t)c])
      fail(errc::invalid_input, "coset graph not connected");
  // Schreier generator index for (coset c, generator g): 1-based c*n+g;
  // tree edges become trivial generators (dropped at the end).
  auto sch = [&](int c, int g) { return c * n + g; };
  std::set<int> trivial;
  for (int c = 0; c < order; ++c) {
    int tg = tree_letter[(size_t)c];
    if (tg == 0) continue;
    if (tg > 0)
      trivial.insert(sch(tree_from[(size_t)c], tg));
    else
      trivial.insert(sch(c, -tg));
  }
  // rewrite rep(c) r rep(c)^-1 in Schreier generators
  GroupPresentation out;
  for (int c = 0; c < order; ++c)
    for (int g = 1; g <= n; ++g)
      out.gens.push_back("x" + std::to_string(c) + "_" + p.gens[(size_t)g - 1]);
  for (int c0 = 0; c0 < order; ++c0) {
    for (auto& r : p.relators) {
      Word w;
      int c = c0;
      for (int x : r) {
        int g = std::abs(x);
        if (x > 0) {
          w.push_back(sch(c, g));
          c = step(c, x);
        } else {
          c = step(c, x);
          w.push_back(-sch(c, g));
        }
      }
      out.relators.push_back(word_reduce(std::move(w)));
    }
  }
  // kill the tree generators: substitute identity
  for (auto& r : out.relators) {
    Word w;
    for (int x : r)
      if (!trivial.count(std::abs(x))) w.push_back(x);
    r = word_reduce(std::move(w));
  }
  // drop trivial generators, compacting indices
  std::vector<int> remap((size_t)order * n + 1, 0);
  std::vector<std::string> gens;
  for (int i = 1; i <= order * n; ++i) {
    if (trivial.count(i)) continue;
    gens.push_back(out.gens[(size_t)i - 1]);
    remap[(size_t)i] = (int)gens.size();
  }
  for (auto& r : out.relators)
    for (auto& x : r) x = x > 0 ? remap[(size_t)x] : -remap[(size_t)-x];
  out.gens = std::move(gens);
  out.provenance = "reidemeister-schreier index " + std::to_string(order);
  return out;
}

int milnor_betti(const GroupPresentation& p) {
  std::vector<std::vector<Int>> classes;
  AbelianGroup h = abelianize_with_classes(p, &classes);
  if (h.free_rank != 0 || h.torsion != std::vector<Int>{Int(6)})
    fail(errc::invalid_input, "milnor_betti needs H1 = Z/6");
  std::vector<int> weights;
  for (auto& cls : classes) {
    // single torsion coordinate mod 6
    weights.push_back((int)cls[0].get_si());
  }
  GroupPresentation k = kernel_presentation(p, 6, weights);
  AbelianGroup hk = abelianize(k);
  return hk.free_rank;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> perm_group_elements(
    const std::vector<std::vector<int>>& gens, size_t max_order) {
  if (gens.empty()) fail(errc::invalid_input, "empty target generator list");
  size_t n = gens[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  for (size_t h = 0; h < todo.size(); ++h) {
    for (auto& g : gens) {
      if (g.size() != n) fail(errc::invalid_input, "permutation size mismatch");
      std::vector<int> prod(n);
      for (size_t i = 0; i < n; ++i) prod[i] = g[(size_t)todo[h][i]];
      if (seen.insert(prod).second) {
        todo.push_back(prod);
        if (todo.size() > max_order)
          fail(errc::resource, "target group order exceeds budget");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

long count_homomorphisms(const GroupPresentation& p,
                         const std::vector<std::vector<int>>& target_gens) {
  auto elems = perm_group_elements(target_gens);
  size_t n = elems[0].size();
  std::vector<int> id((size_t)n);
  std::iota(id.begin(), id.end(), 0);
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = a[(size_t)b[i]];
    return r;
  };
  auto invp = [&](const std::vector<int>& a) {
    std::vector<int> r(n);
    for (size_t i = 0; i < n; ++i) r[(size_t)a[i]] = (int)i;
    return r;
  };
  int g = p.num_gens();
  std::vector<size_t> choice((size_t)g, 0);
  std::vector<std::vector<int>> inv_elems;
  for (auto& e : elems) inv_elems.push_back(invp(e));
  long count = 0;
  // depth-first over generator images with relator checks at the leaves;
  // relators touching only assigned generators are checked early
  std::vector<std::vector<size_t>> check_at((size_t)g);
  for (size_t ri = 0; ri < p.relators.size(); ++ri) {
    int hi = 0;
    for (int x : p.relators[ri]) hi = std::max(hi, std::abs(x));
    if (hi == 0) continue;
    check_at[(size_t)hi - 1].push_back(ri);
  }
  std::function<void(int)> rec = [&](int depth) {
    if (depth == g) { ++count; return; }
    for (size_t e = 0; e < elems.size(); ++e) {
      choice[(size_t)depth] = e;
      bool ok = true;
      for (size_t ri : check_at[(size_t)depth]) {
        std::vector<int> acc = id;
        for (int x : p.relators[ri]) {
          const auto& img = x > 0 ? elems[choice[(size_t)(std::abs(x) - 1)]]
                                  : inv_elems[choice[(size_t)(std::abs(x) - 1)]];
          acc = mul(acc, img);
        }
        if (acc != id) { ok = false; break; }
      }
      if (ok) rec(depth + 1);
    }
  };
  rec(0);
  // relators that use no generator at all (empty) are trivially satisfied
  return count;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PROVED_Z2_STAR_Z3: return "PROVED_Z2_STAR_Z3";
    case Verdict::PROVED_B4P1: return "PROVED_B4P1";
    case Verdict::PROVED_B3: return "PROVED_B3";
    case Verdict::DISTINGUISHED: return "DISTINGUISHED";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

} // namespace curvetopo
