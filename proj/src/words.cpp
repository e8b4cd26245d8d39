#include "curvetopo/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curvetopo {

Word word_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (x == 0) fail(errc::invalid_input, "zero letter in word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word word_cyclic_reduce(Word w) {
  w = word_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return word_reduce(std::move(out));
}

Word word_conj(const Word& w, const Word& by) {
  return word_concat(word_concat(by, w), word_inverse(by));
}

Word word_pow(const Word& w, int e) {
  Word out;
  Word base = e < 0 ? word_inverse(w) : w;
  for (int i = 0; i < std::abs(e); ++i) out = word_concat(out, base);
  return out;
}

Word word_cyclic_canon(const Word& w0) {
  Word w = word_cyclic_reduce(w0);
  if (w.empty()) return w;
  Word best;
  for (int inv = 0; inv < 2; ++inv) {
    Word v = inv ? word_inverse(w) : w;
    for (size_t r = 0; r < v.size(); ++r) {
      Word rot(v.begin() + (long)r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + (long)r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

std::string word_str(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (int x : w) {
    if (!first) os << " ";
    first = false;
    size_t i = (size_t)(std::abs(x) - 1);
    if (i >= gens.size()) fail(errc::invalid_input, "letter out of range");
    const std::string& g = gens[i];
    if (g.size() == 1 && std::isalpha((unsigned char)g[0])) {
      char c = g[0];
      os << (char)(x > 0 ? std::tolower(c) : std::toupper(c));
    } else {
      os << g << (x > 0 ? "" : "'");
    }
  }
  return os.str();
}

Word word_parse(const std::string& text,
                const std::vector<std::string>& gens) {
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    bool invert = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      invert = true;
      tok.pop_back();
    }
    int idx = -1;
    for (size_t i = 0; i < gens.size(); ++i) {
      const std::string& g = gens[i];
      if (g == tok) { idx = (int)i; break; }
      if (g.size() == 1 && tok.size() == 1 &&
          std::tolower((unsigned char)tok[0]) ==
              std::tolower((unsigned char)g[0])) {
        idx = (int)i;
        invert = std::isupper((unsigned char)tok[0]);
        break;
      }
    }
    if (idx < 0) fail(errc::invalid_input, "unknown generator token: " + tok);
    out.push_back(invert ? -(idx + 1) : idx + 1);
  }
  return word_reduce(std::move(out));
}

} // namespace curvetopo
