#include "curvetopo/snf.hpp"

#include <algorithm>

#include "curvetopo/error.hpp"

namespace curvetopo {

namespace {

void col_addmul(IMat& a, IMat* v, int dst, int src, const Int& q) {
  for (auto& row : a) row[(size_t)dst] += q * row[(size_t)src];
  if (v)
    for (auto& row : *v) row[(size_t)dst] += q * row[(size_t)src];
}

void col_swap(IMat& a, IMat* v, int i, int j) {
  for (auto& row : a) std::swap(row[(size_t)i], row[(size_t)j]);
  if (v)
    for (auto& row : *v) std::swap(row[(size_t)i], row[(size_t)j]);
}

void col_neg(IMat& a, IMat* v, int i) {
  for (auto& row : a) row[(size_t)i] = -row[(size_t)i];
  if (v)
    for (auto& row : *v) row[(size_t)i] = -row[(size_t)i];
}

} // namespace

std::vector<Int> smith_normal_form(IMat a, IMat* col_ops) {
  int m = (int)a.size();
  int n = m ? (int)a[0].size() : 0;
  if (col_ops) {
    col_ops->assign((size_t)n, std::vector<Int>((size_t)n, Int(0)));
    for (int i = 0; i < n; ++i) (*col_ops)[(size_t)i][(size_t)i] = 1;
  }
  int t = 0;
  int rank_cap = std::min(m, n);
  while (t < rank_cap) {
    // find a pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a[(size_t)i][(size_t)j] == 0) continue;
        Int v = abs(a[(size_t)i][(size_t)j]);
        if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (pi < 0) break;
    std::swap(a[(size_t)t], a[(size_t)pi]);
    col_swap(a, col_ops, t, pj);
    if (a[(size_t)t][(size_t)t] < 0) col_neg(a, col_ops, t);
    bool again = false;
    // clear column t with row operations
    for (int i = t + 1; i < m; ++i) {
      if (a[(size_t)i][(size_t)t] == 0) continue;
      Int q = a[(size_t)i][(size_t)t] / a[(size_t)t][(size_t)t];
      for (int j = t; j < n; ++j)
        a[(size_t)i][(size_t)j] -= q * a[(size_t)t][(size_t)j];
      if (a[(size_t)i][(size_t)t] != 0) again = true;
    }
    // clear row t with column operations
    for (int j = t + 1; j < n; ++j) {
      if (a[(size_t)t][(size_t)j] == 0) continue;
      Int q = a[(size_t)t][(size_t)j] / a[(size_t)t][(size_t)t];
      col_addmul(a, col_ops, j, t, -q);
      if (a[(size_t)t][(size_t)j] != 0) again = true;
    }
    if (again) continue; // remainders left; re-pick a smaller pivot
    // enforce divisibility of the rest by the pivot
    bool fixed = true;
    for (int i = t + 1; i < m && fixed; ++i)
      for (int j = t + 1; j < n && fixed; ++j) {
        if (a[(size_t)i][(size_t)j] % a[(size_t)t][(size_t)t] != 0) {
          // add row i to row t, then loop again
          for (int k = t; k < n; ++k)
            a[(size_t)t][(size_t)k] += a[(size_t)i][(size_t)k];
          fixed = false;
        }
      }
    if (!fixed) continue;
    ++t;
  }
  std::vector<Int> d;
  for (int i = 0; i < rank_cap; ++i) {
    Int v = abs(a[(size_t)i][(size_t)i]);
    d.push_back(v);
  }
  return d;
}

AbelianGroup cokernel(const IMat& relations, int n) {
  return cokernel_with_classes(relations, n, nullptr);
}

AbelianGroup cokernel_with_classes(const IMat& relations, int n,
                                   std::vector<std::vector<Int>>* gen_classes) {
  IMat a = relations;
  for (auto& r : a)
    if ((int)r.size() != n) fail(errc::invalid_input, "relation arity mismatch");
  if (a.empty()) a.push_back(std::vector<Int>((size_t)n, Int(0)));
  IMat v;
  auto d = smith_normal_form(a, &v);
  AbelianGroup g;
  int rank = 0;
  for (auto& x : d)
    if (x != 0) ++rank;
  g.free_rank = n - rank;
  for (auto& x : d)
    if (x > 1) g.torsion.push_back(x);
  if (gen_classes) {
    // class of generator k = row k of V, coordinates j with d_j > 1 are
    // torsion (mod d_j), columns beyond the rank are free coordinates
    gen_classes->assign((size_t)n, {});
    std::vector<int> keep; // columns contributing torsion entries
    for (int j = 0; j < (int)d.size(); ++j)
      if (d[(size_t)j] > 1) keep.push_back(j);
    for (int k = 0; k < n; ++k) {
      std::vector<Int> cls;
      for (int j : keep) {
        Int r = v[(size_t)k][(size_t)j] % d[(size_t)j];
        if (r < 0) r += d[(size_t)j];
        cls.push_back(r);
      }
      for (int j = rank; j < n; ++j) cls.push_back(v[(size_t)k][(size_t)j]);
      (*gen_classes)[(size_t)k] = std::move(cls);
    }
  }
  return g;
}

} // namespace curvetopo
