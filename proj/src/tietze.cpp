#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "curvetopo/groups.hpp"

namespace curvetopo {

namespace {

// substitute generator k (1-based) by word w (over the same indexing),
// then remove index k, shifting higher indices down
Word substitute_gen(const Word& r, int k, const Word& w) {
  Word out;
  Word winv = word_inverse(w);
  for (int x : r) {
    if (x == k) {
      out.insert(out.end(), w.begin(), w.end());
    } else if (x == -k) {
      out.insert(out.end(), winv.begin(), winv.end());
    } else {
      out.push_back(x);
    }
  }
  out = word_reduce(std::move(out));
  for (auto& x : out) {
    if (x > k) --x;
    if (x < -k) ++x;
  }
  return out;
}

Word rotate(const Word& w, int r) {
  if (w.empty()) return w;
  r = ((r % (int)w.size()) + (int)w.size()) % (int)w.size();
  Word out(w.begin() + r, w.end());
  out.insert(out.end(), w.begin(), w.begin() + r);
  return out;
}

struct State {
  GroupPresentation p;
  std::vector<Word> images; // original generator -> word in current gens
  std::vector<std::string> steps;

  void log(const std::string& s) { steps.push_back(s); }

  void apply_canon(size_t i) {
    p.relators[i] = word_cyclic_canon(p.relators[i]);
    log("canon " + std::to_string(i));
  }
  void apply_del(size_t i) {
    if (!p.relators[i].empty())
      fail(errc::invalid_input, "del on nonempty relator");
    p.relators.erase(p.relators.begin() + (long)i);
    log("del " + std::to_string(i));
  }
  void apply_dup(size_t i) {
    Word ci = word_cyclic_canon(p.relators[i]);
    bool twin = false;
    for (size_t j = 0; j < p.relators.size(); ++j)
      if (j != i && word_cyclic_canon(p.relators[j]) == ci) twin = true;
    if (!twin) fail(errc::invalid_input, "dup without a twin relator");
    p.relators.erase(p.relators.begin() + (long)i);
    log("dup " + std::to_string(i));
  }
  void apply_elim(int k, size_t i) {
    const Word& r = p.relators[i];
    int count = 0, pos = -1;
    for (size_t t = 0; t < r.size(); ++t)
      if (std::abs(r[t]) == k) { ++count; pos = (int)t; }
    if (count != 1)
      fail(errc::invalid_input, "elim needs a unique occurrence");
    Word rot = rotate(r, pos); // starts with +-k
    Word rest(rot.begin() + 1, rot.end());
    Word w = rot[0] > 0 ? word_inverse(rest) : rest;
    // w is the word equal to generator k (over current indexing, k excluded)
    GroupPresentation np;
    np.gens = p.gens;
    np.gens.erase(np.gens.begin() + (k - 1));
    if (!p.meridian.empty()) {
      np.meridian = p.meridian;
      np.meridian.erase(np.meridian.begin() + (k - 1));
    }
    np.provenance = p.provenance;
    for (size_t j = 0; j < p.relators.size(); ++j) {
      if (j == i) continue;
      np.relators.push_back(substitute_gen(p.relators[j], k, w));
    }
    for (auto& im : images) im = substitute_gen(im, k, w);
    p = std::move(np);
    log("elim " + std::to_string(k) + " " + std::to_string(i));
  }
  void apply_rw(size_t i, int irot, size_t j, int jrot, int jinv, int len) {
    Word ri = rotate(p.relators[i], irot);
    Word s = p.relators[j];
    if (jinv) s = word_inverse(s);
    s = rotate(s, jrot);
    if (len <= 0 || len > (int)s.size() || len > (int)ri.size())
      fail(errc::invalid_input, "rw length out of range");
    for (int t = 0; t < len; ++t)
      if (ri[(size_t)t] != s[(size_t)t])
        fail(errc::invalid_input, "rw subword mismatch");
    Word tail(s.begin() + len, s.end());
    Word nw = word_inverse(tail);
    nw.insert(nw.end(), ri.begin() + len, ri.end());
    p.relators[i] = word_reduce(std::move(nw));
    log("rw " + std::to_string(i) + " " + std::to_string(irot) + " " +
        std::to_string(j) + " " + std::to_string(jrot) + " " +
        std::to_string(jinv) + " " + std::to_string(len));
  }
  void apply_sort() {
    std::stable_sort(p.relators.begin(), p.relators.end(),
                     [](const Word& a, const Word& b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a < b;
                     });
    log("sort");
  }
};

// one cleanup pass: canonical forms, empty and duplicate removal
bool cleanup(State& st) {
  bool changed = false;
  for (size_t i = 0; i < st.p.relators.size(); ++i) {
    Word c = word_cyclic_canon(st.p.relators[i]);
    if (c != st.p.relators[i]) {
      st.apply_canon(i);
      changed = true;
    }
  }
  for (size_t i = st.p.relators.size(); i-- > 0;) {
    if (st.p.relators[i].empty()) {
      st.apply_del(i);
      changed = true;
    }
  }
  for (size_t i = st.p.relators.size(); i-- > 0;) {
    for (size_t j = 0; j < i; ++j)
      if (st.p.relators[j] == st.p.relators[i]) {
        st.apply_dup(i);
        changed = true;
        break;
      }
  }
  return changed;
}

struct RwCand {
  int gain = 0;
  size_t i = 0, j = 0;
  int irot = 0, jrot = 0, jinv = 0, len = 0;
};

bool find_rewrite(const State& st, RwCand& best, long& budget) {
  best.gain = 0;
  const auto& rel = st.p.relators;
  for (size_t i = 0; i < rel.size(); ++i) {
    for (size_t j = 0; j < rel.size(); ++j) {
      if (i == j) continue;
      const Word& s0 = rel[j];
      int ls = (int)s0.size();
      if (ls < 2) continue;
      for (int jinv = 0; jinv < 2; ++jinv) {
        Word s = jinv ? word_inverse(s0) : s0;
        for (int jrot = 0; jrot < ls; ++jrot) {
          Word sr = rotate(s, jrot);
          // longest matched prefix of sr inside rotations of rel[i]
          int li = (int)rel[i].size();
          for (int irot = 0; irot < li; ++irot) {
            if (--budget < 0) return best.gain > 0;
            Word ri = rotate(rel[i], irot);
            int len = 0;
            while (len < li && len < ls && ri[(size_t)len] == sr[(size_t)len])
              ++len;
            // replacing len letters by (ls - len) must strictly shorten
            int gain = 2 * len - ls;
            if (gain > best.gain) {
              best = {gain, i, j, irot, jrot, jinv, len};
            }
          }
        }
      }
    }
  }
  return best.gain > 0;
}

struct ElimCand {
  bool found = false;
  long score = 0;
  int k = 0;
  size_t i = 0;
};

ElimCand find_elim(const State& st) {
  ElimCand best;
  const auto& rel = st.p.relators;
  int n = st.p.num_gens();
  std::vector<long> occ((size_t)n + 1, 0);
  for (auto& r : rel)
    for (int x : r) ++occ[(size_t)std::abs(x)];
  for (size_t i = 0; i < rel.size(); ++i) {
    std::map<int, int> cnt;
    for (int x : rel[i]) ++cnt[std::abs(x)];
    for (auto& [k, c] : cnt) {
      if (c != 1) continue;
      long w = (long)rel[i].size() - 1;
      long elsewhere = occ[(size_t)k] - 1;
      long score = elsewhere * (w - 1) - (long)rel[i].size();
      if (!best.found || score < best.score ||
          (score == best.score && (k < best.k || (k == best.k && i < best.i)))) {
        best = {true, score, k, i};
      }
    }
  }
  return best;
}

} // namespace

TietzeResult tietze_simplify(const GroupPresentation& p0, long budget) {
  State st;
  st.p = p0;
  for (auto& r : st.p.relators) r = word_reduce(r);
  st.images.resize((size_t)p0.num_gens());
  for (int i = 0; i < p0.num_gens(); ++i) st.images[(size_t)i] = {i + 1};
  long initial_len = std::max<long>(st.p.total_length(), 16);
  bool exhausted = false;
  for (;;) {
    if (budget < 0) { exhausted = true; break; }
    if (cleanup(st)) continue;
    RwCand rw;
    if (find_rewrite(st, rw, budget)) {
      st.apply_rw(rw.i, rw.irot, rw.j, rw.jrot, rw.jinv, rw.len);
      continue;
    }
    ElimCand el = find_elim(st);
    if (el.found && st.p.num_gens() > 1) {
      long projected = st.p.total_length() + el.score;
      if (el.score <= 0 || projected <= 12 * initial_len + 512) {
        st.apply_elim(el.k, el.i);
        continue;
      }
    }
    break;
  }
  cleanup(st);
  st.apply_sort();
  TietzeResult out;
  out.pres = st.p;
  out.steps = st.steps;
  out.gen_images = st.images;
  out.budget_exhausted = exhausted;
  return out;
}

GroupPresentation tietze_replay(const GroupPresentation& p0,
                                const std::vector<std::string>& steps) {
  State st;
  st.p = p0;
  for (auto& r : st.p.relators) r = word_reduce(r);
  st.images.resize((size_t)p0.num_gens());
  for (int i = 0; i < p0.num_gens(); ++i) st.images[(size_t)i] = {i + 1};
  for (auto& s : steps) {
    std::istringstream is(s);
    std::string kind;
    is >> kind;
    if (kind == "canon") {
      size_t i;
      is >> i;
      st.apply_canon(i);
    } else if (kind == "del") {
      size_t i;
      is >> i;
      st.apply_del(i);
    } else if (kind == "dup") {
      size_t i;
      is >> i;
      st.apply_dup(i);
    } else if (kind == "elim") {
      int k;
      size_t i;
      is >> k >> i;
      st.apply_elim(k, i);
    } else if (kind == "rw") {
      size_t i, j;
      int irot, jrot, jinv, len;
      is >> i >> irot >> j >> jrot >> jinv >> len;
      st.apply_rw(i, irot, j, jrot, jinv, len);
    } else if (kind == "sort") {
      st.apply_sort();
    } else {
      fail(errc::invalid_input, "unknown tietze step: " + s);
    }
  }
  return st.p;
}

bool word_trivial_in(const Word& w0, const std::vector<Word>& relators,
                     long budget, int maxlen) {
  Word w = word_cyclic_reduce(w0);
  if (w.empty()) return true;
  std::vector<Word> moves;
  for (auto& r : relators) {
    Word c = word_cyclic_reduce(r);
    if (c.empty()) continue;
    for (int inv = 0; inv < 2; ++inv) {
      Word s = inv ? word_inverse(c) : c;
      for (size_t rot = 0; rot < s.size(); ++rot)
        moves.push_back(rotate(s, (int)rot));
    }
  }
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty() && budget > 0) {
    std::vector<Word> next;
    for (auto& cur : frontier) {
      for (auto& m : moves) {
        for (size_t pos = 0; pos <= cur.size(); ++pos) {
          if (--budget < 0) return false;
          Word cand;
          cand.reserve(cur.size() + m.size());
          cand.insert(cand.end(), cur.begin(), cur.begin() + (long)pos);
          cand.insert(cand.end(), m.begin(), m.end());
          cand.insert(cand.end(), cur.begin() + (long)pos, cur.end());
          cand = word_cyclic_reduce(std::move(cand));
          if (cand.empty()) return true;
          if ((int)cand.size() > maxlen) continue;
          if ((int)cand.size() > (int)cur.size() + (int)m.size() / 2 + 2)
            continue; // keep the frontier lean
          if (seen.insert(cand).second) next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

} // namespace curvetopo
