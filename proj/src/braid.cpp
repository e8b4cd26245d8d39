#include "curvetopo/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvetopo {

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos((size_t)strands);
  std::iota(pos.begin(), pos.end(), 0);
  for (int letter : letters) {
    int i = std::abs(letter) - 1;
    std::swap(pos[(size_t)i], pos[(size_t)i + 1]);
  }
  // pos[p] = which strand ended at position p; invert to strand -> position
  std::vector<int> perm((size_t)strands);
  for (int p = 0; p < strands; ++p) perm[(size_t)pos[(size_t)p]] = p;
  return perm;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands = strands;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    fail(errc::invalid_input, "braid strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

long BraidWord::writhe() const {
  long w = 0;
  for (int letter : letters) w += letter > 0 ? 1 : -1;
  return w;
}

BraidWord BraidWord::reduced() const {
  BraidWord out;
  out.strands = strands;
  for (int letter : letters) {
    if (!out.letters.empty() && out.letters.back() == -letter)
      out.letters.pop_back();
    else
      out.letters.push_back(letter);
  }
  return out;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  os << "B" << strands << "[";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << " ";
    os << "s" << std::abs(letters[i]) << (letters[i] > 0 ? "" : "'");
  }
  os << "]";
  return os.str();
}

Word artin_apply(const BraidWord& b, int gen) {
  Word w{gen};
  for (int letter : b.letters) {
    int i = std::abs(letter);
    Word out;
    for (int x : w) {
      int g = std::abs(x);
      int sgn = x > 0 ? 1 : -1;
      auto push = [&](std::initializer_list<int> ys) {
        if (sgn > 0) {
          for (int y : ys) out.push_back(y);
        } else {
          for (auto it = std::rbegin(ys); it != std::rend(ys); ++it)
            out.push_back(-*it);
        }
      };
      if (letter > 0) {
        // sigma_i: g_i -> g_i g_{i+1} g_i^{-1}, g_{i+1} -> g_i
        if (g == i)
          push({i, i + 1, -i});
        else if (g == i + 1)
          push({i});
        else
          push({g});
      } else {
        // sigma_i^{-1}: g_i -> g_{i+1}, g_{i+1} -> g_{i+1}^{-1} g_i g_{i+1}
        if (g == i)
          push({i + 1});
        else if (g == i + 1)
          push({-(i + 1), i, i + 1});
        else
          push({g});
      }
    }
    w = word_reduce(std::move(out));
  }
  return w;
}

std::vector<Word> braid_relations(const BraidWord& b) {
  std::vector<Word> out;
  for (int g = 1; g <= b.strands; ++g) {
    Word img = artin_apply(b, g);
    Word rel = word_concat(img, Word{-g});
    if (!rel.empty()) out.push_back(rel);
  }
  return out;
}

BraidWord braid_from_paths(const std::vector<std::vector<cball>>& paths,
                           double theta) {
  int d = (int)paths.size();
  if (d == 0) fail(errc::invalid_input, "no strands");
  size_t m = paths[0].size();
  for (auto& p : paths)
    if (p.size() != m) fail(errc::invalid_input, "ragged strand paths");
  cplx dir = std::exp(cplx(0, -theta));
  auto proj = [&](const cball& b) { return (dir * b.c).real(); };
  auto transv = [&](const cball& b) { return (dir * b.c).imag(); };
  auto order_at = [&](size_t k) {
    std::vector<int> idx((size_t)d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return proj(paths[(size_t)a][k]) < proj(paths[(size_t)b][k]);
    });
    return idx;
  };
  BraidWord out;
  out.strands = d;
  std::vector<int> cur = order_at(0);
  for (size_t k = 0; k + 1 < m; ++k) {
    std::vector<int> nxt = order_at(k + 1);
    if (nxt == cur) continue;
    // peel off adjacent transpositions; they must be disjoint in one step
    std::vector<int> work = cur;
    std::vector<std::pair<int, int>> swaps; // (position, sign)
    int guard = 0;
    while (work != nxt) {
      if (++guard > d * d)
        fail(errc::degenerate,
             "strand ordering changed by more than adjacent swaps in one "
             "step; refine the trace");
      bool progressed = false;
      for (int i = 0; i + 1 < d; ++i) {
        if (work[(size_t)i] == nxt[(size_t)i]) continue;
        if (work[(size_t)i] == nxt[(size_t)i + 1] &&
            work[(size_t)i + 1] == nxt[(size_t)i]) {
          int a = work[(size_t)i], b = work[(size_t)i + 1];
          // sign from the transverse separation around the crossing
          double ta = transv(paths[(size_t)a][k]) - transv(paths[(size_t)b][k]);
          double tb =
              transv(paths[(size_t)a][k + 1]) - transv(paths[(size_t)b][k + 1]);
          double t = std::abs(ta) > std::abs(tb) ? ta : tb;
          if (ta * tb < 0 && std::min(std::abs(ta), std::abs(tb)) >
                                 0.1 * std::max(std::abs(ta), std::abs(tb)))
            fail(errc::degenerate,
                 "ambiguous crossing side; refine the trace");
          if (t == 0) fail(errc::degenerate, "degenerate crossing projection");
          swaps.emplace_back(i + 1, t < 0 ? +1 : -1);
          std::swap(work[(size_t)i], work[(size_t)i + 1]);
          progressed = true;
          ++i;
        }
      }
      if (!progressed)
        fail(errc::degenerate,
             "non-adjacent strand reordering in one step; refine the trace");
    }
    for (auto& [pos, sgn] : swaps) out.letters.push_back(sgn * pos);
    cur = nxt;
  }
  return out;
}

} // namespace curvetopo
