#include "curvetopo/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

#include "curvetopo/error.hpp"

namespace curvetopo {

LPoly LPoly::term(const Rat& q, int e) {
  LPoly p;
  if (q != 0) p.c[e] = q;
  return p;
}

void LPoly::add(int e, const Rat& q) {
  if (q == 0) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c[e] = q;
  } else {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (auto& [e, q] : b.c) r.add(e, q);
  return r;
}

LPoly operator-(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (auto& [e, q] : b.c) r.add(e, -q);
  return r;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  for (auto& [e1, q1] : a.c)
    for (auto& [e2, q2] : b.c) r.add(e1 + e2, q1 * q2);
  return r;
}

LPoly LPoly::operator-() const {
  LPoly r;
  for (auto& [e, q] : c) r.c[e] = -q;
  return r;
}

std::string LPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rat q = it->second;
    if (!first) {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    } else if (q < 0) {
      os << "-";
      q = -q;
    }
    first = false;
    int e = it->first;
    if (e == 0) {
      os << rat_str(q);
    } else {
      if (q != 1) os << rat_str(q) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LPoly alexander_normalize(const LPoly& p) {
  if (p.is_zero()) return p;
  int lo = p.c.begin()->first;
  Int num_gcd(0), den_lcm(1);
  for (auto& [e, q] : p.c) {
    num_gcd = gcd(num_gcd, Int(q.get_num()));
    den_lcm = lcm(den_lcm, Int(q.get_den()));
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  LPoly out;
  for (auto& [e, q] : p.c) out.c[e - lo] = q * scale;
  if (out.c.begin()->second < 0)
    for (auto& [e, q] : out.c) q = -q;
  return out;
}

// ------------------------- dense Q[t] helpers --------------------------------

namespace {

using QP = std::vector<Rat>; // coeffs, trailing zeros trimmed

QP qp_from(const LPoly& p) {
  if (p.is_zero()) return {};
  int lo = p.c.begin()->first;
  int hi = p.c.rbegin()->first;
  QP out((size_t)(hi - lo + 1), Rat(0));
  for (auto& [e, q] : p.c) out[(size_t)(e - lo)] = q;
  return out;
}

LPoly lp_from(const QP& p) {
  LPoly out;
  for (size_t i = 0; i < p.size(); ++i) out.add((int)i, p[i]);
  return out;
}

int qdeg(const QP& p) { return (int)p.size() - 1; }

void qtrim(QP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qmul(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QP qsub(QP a, const QP& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

void qdivrem(const QP& a, const QP& b, QP& q, QP& r) {
  if (b.empty()) fail(errc::invalid_input, "laurent division by zero");
  r = a;
  qtrim(r);
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while ((int)r.size() >= (int)b.size() && !r.empty()) {
    Rat f = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    qtrim(r);
  }
  qtrim(q);
}

} // namespace

std::vector<LPoly> smith_laurent(std::vector<std::vector<LPoly>> m0) {
  // work over Q[t] after shifting each entry by a unit
  int rows = (int)m0.size();
  int cols = rows ? (int)m0[0].size() : 0;
  std::vector<std::vector<QP>> a((size_t)rows, std::vector<QP>((size_t)cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[(size_t)i][(size_t)j] = qp_from(m0[(size_t)i][(size_t)j]);
  int t = 0, cap = std::min(rows, cols);
  int guard = 0;
  while (t < cap) {
    if (++guard > 10000) fail(errc::resource, "laurent smith form stalled");
    int pi = -1, pj = -1, best = INT_MAX;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[(size_t)i][(size_t)j].empty()) continue;
        int d = qdeg(a[(size_t)i][(size_t)j]);
        if (d < best) { best = d; pi = i; pj = j; }
      }
    if (pi < 0) break;
    std::swap(a[(size_t)t], a[(size_t)pi]);
    for (int i = 0; i < rows; ++i)
      std::swap(a[(size_t)i][(size_t)t], a[(size_t)i][(size_t)pj]);
    bool again = false;
    for (int i = t + 1; i < rows; ++i) {
      if (a[(size_t)i][(size_t)t].empty()) continue;
      QP q, r;
      qdivrem(a[(size_t)i][(size_t)t], a[(size_t)t][(size_t)t], q, r);
      for (int j = t; j < cols; ++j)
        a[(size_t)i][(size_t)j] =
            qsub(a[(size_t)i][(size_t)j], qmul(q, a[(size_t)t][(size_t)j]));
      if (!a[(size_t)i][(size_t)t].empty()) again = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[(size_t)t][(size_t)j].empty()) continue;
      QP q, r;
      qdivrem(a[(size_t)t][(size_t)j], a[(size_t)t][(size_t)t], q, r);
      for (int i = t; i < rows; ++i)
        a[(size_t)i][(size_t)j] =
            qsub(a[(size_t)i][(size_t)j], qmul(q, a[(size_t)i][(size_t)t]));
      if (!a[(size_t)t][(size_t)j].empty()) again = true;
    }
    if (again) continue;
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j) {
        if (a[(size_t)i][(size_t)j].empty()) continue;
        QP q, r;
        qdivrem(a[(size_t)i][(size_t)j], a[(size_t)t][(size_t)t], q, r);
        if (!r.empty()) {
          for (int k = t; k < cols; ++k) {
            QP sum = a[(size_t)t][(size_t)k];
            sum = qsub(sum, qmul(QP{Rat(-1)}, a[(size_t)i][(size_t)k]));
            a[(size_t)t][(size_t)k] = sum;
          }
          fixed = false;
        }
      }
    if (!fixed) continue;
    ++t;
  }
  std::vector<LPoly> out;
  for (int i = 0; i < cap; ++i)
    out.push_back(alexander_normalize(lp_from(a[(size_t)i][(size_t)i])));
  return out;
}

LPoly parse_lpoly(const std::string& text) {
  // integer-coefficient polynomial in t, e.g. "t^2-t+1", "(t^2-t+1)^2"
  struct Lx {
    const std::string& s;
    size_t p = 0;
    void skip() { while (p < s.size() && std::isspace((unsigned char)s[p])) ++p; }
    bool eat(char c) {
      skip();
      if (p < s.size() && s[p] == c) { ++p; return true; }
      return false;
    }
  } lx{text};
  // tiny recursive parser: expr := ['-'] term (+|- term)*;
  // term := factor ('^' int | '*' factor)*; factor := int | 't' | '(' expr ')'
  struct P {
    Lx& lx;
    LPoly expr() {
      bool neg = lx.eat('-');
      LPoly v = term();
      if (neg) v = -v;
      for (;;) {
        if (lx.eat('+')) v = v + term();
        else if (lx.eat('-')) v = v - term();
        else return v;
      }
    }
    LPoly term() {
      LPoly v = factor();
      for (;;) {
        if (lx.eat('*')) v = v * factor();
        else if (lx.eat('^')) {
          long e = integer();
          LPoly acc = LPoly::one();
          for (long i = 0; i < e; ++i) acc = acc * v;
          v = acc;
        } else {
          lx.skip();
          if (lx.p < lx.s.size() &&
              (lx.s[lx.p] == 't' || lx.s[lx.p] == '(')) {
            v = v * factor(); // implicit product like "2t"
          } else {
            return v;
          }
        }
      }
    }
    LPoly factor() {
      lx.skip();
      if (lx.eat('(')) {
        LPoly v = expr();
        if (!lx.eat(')')) fail(errc::invalid_input, "missing ')'");
        return v;
      }
      if (lx.p < lx.s.size() && lx.s[lx.p] == 't') {
        ++lx.p;
        return LPoly::term(Rat(1), 1);
      }
      return LPoly::term(Rat(integer()), 0);
    }
    long integer() {
      lx.skip();
      size_t q = lx.p;
      while (lx.p < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.p])) ++lx.p;
      if (q == lx.p) fail(errc::invalid_input, "expected integer in: " + lx.s);
      return std::stol(lx.s.substr(q, lx.p - q));
    }
  } parser{lx};
  LPoly v = parser.expr();
  lx.skip();
  if (lx.p != text.size())
    fail(errc::invalid_input, "trailing junk in polynomial: " + text);
  return v;
}

} // namespace curvetopo
