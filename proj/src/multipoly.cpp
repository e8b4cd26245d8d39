#include "curvetopo/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curvetopo {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars,
                     std::map<std::vector<int>, AlgNum> terms)
    : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if ((int)e.size() != (int)vars_.size())
      fail(errc::invalid_input, "exponent vector arity mismatch");
    insert_term(e, c);
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const AlgNum& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
  MultiPoly p(std::move(vars));
  std::vector<int> e(p.vars_.size(), 0);
  e.at((size_t)index) = 1;
  p.terms_[e] = AlgNum(1L);
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return (int)i;
  return -1;
}

void MultiPoly::insert_term(const std::vector<int>& e, const AlgNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    AlgNum s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

int MultiPoly::degree(int var) const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, e[(size_t)var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          terms_.begin()->first == std::vector<int>(vars_.size(), 0));
}

AlgNum MultiPoly::constant_value() const {
  if (terms_.empty()) return AlgNum();
  if (!is_constant()) fail(errc::invalid_input, "not a constant polynomial");
  return terms_.begin()->second;
}

static void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars())
    fail(errc::invalid_input, "variable list mismatch");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  MultiPoly out(a.vars_);
  out.terms_ = a.terms_;
  for (auto& [e, c] : b.terms_) out.insert_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  MultiPoly out(a.vars_);
  out.terms_ = a.terms_;
  for (auto& [e, c] : b.terms_) out.insert_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  MultiPoly out(a.vars_);
  std::vector<int> e(a.vars_.size());
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

MultiPoly MultiPoly::scaled(const AlgNum& s) const {
  MultiPoly out(vars_);
  if (s.is_zero()) return out;
  for (auto& [e, c] : terms_) out.terms_[e] = c * s;
  return out;
}

MultiPoly MultiPoly::pow(long e) const {
  MultiPoly acc = MultiPoly::constant(vars_, AlgNum(1L));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(vars_);
  for (auto& [e, c] : terms_) {
    if (e[(size_t)var] == 0) continue;
    std::vector<int> e2 = e;
    e2[(size_t)var] -= 1;
    out.insert_term(e2, c * AlgNum((long)e[(size_t)var]));
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
  int d = degree(var);
  std::vector<MultiPoly> out((size_t)std::max(d + 1, 0), MultiPoly(vars_));
  for (auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    int k = e2[(size_t)var];
    e2[(size_t)var] = 0;
    out[(size_t)k].insert_term(e2, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(int var, const AlgNum& value) const {
  MultiPoly out(vars_);
  for (auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    int k = e2[(size_t)var];
    e2[(size_t)var] = 0;
    out.insert_term(e2, c * value.pow(k));
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& repl) const {
  if (repl.size() != vars_.size())
    fail(errc::invalid_input, "compose arity mismatch");
  const std::vector<std::string>& tv =
      repl.empty() ? vars_ : repl[0].vars();
  for (auto& r : repl)
    if (r.vars() != tv) fail(errc::invalid_input, "compose variable mismatch");
  MultiPoly out(tv);
  for (auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(tv, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * repl[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

AlgNum MultiPoly::eval(const std::vector<AlgNum>& point) const {
  if (point.size() != vars_.size())
    fail(errc::invalid_input, "eval arity mismatch");
  AlgNum acc;
  for (auto& [e, c] : terms_) {
    AlgNum t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * point[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

cball MultiPoly::eval_ball(const std::vector<cball>& point) const {
  if (point.size() != vars_.size())
    fail(errc::invalid_input, "eval arity mismatch");
  cball acc(0.0);
  for (auto& [e, c] : terms_) {
    cball t = c.approx();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * pow_int(point[i], e[i]);
    acc = acc + t;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

UPoly MultiPoly::to_upoly(int var) const {
  int d = degree(var);
  std::vector<AlgNum> co((size_t)std::max(d + 1, 0), AlgNum());
  for (auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i)
      if ((int)i != var && e[i] != 0)
        fail(errc::invalid_input, "polynomial is not univariate in " +
                                      vars_[(size_t)var]);
    co[(size_t)e[(size_t)var]] = c;
  }
  return UPoly(std::move(co));
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, std::vector<std::string> vars,
                                int var) {
  MultiPoly out(std::move(vars));
  std::vector<int> e(out.vars_.size(), 0);
  for (int i = 0; i <= p.deg(); ++i) {
    e[(size_t)var] = i;
    out.insert_term(e, p[i]);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] > 0) {
        os << "*" << vars_[i];
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
  }
  return os.str();
}

// --------------------------- expression parser ------------------------------

namespace {

struct PLexer {
  const std::string& s;
  size_t p = 0;
  void skip() {
    while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) { ++p; return true; }
    return false;
  }
  char peek() {
    skip();
    return p < s.size() ? s[p] : '\0';
  }
};

struct PParser {
  PLexer lx;
  const TowerPtr& tw;
  const std::vector<std::string>& vars;

  MultiPoly expr() {
    bool neg = lx.eat('-');
    MultiPoly v = term();
    if (neg) v = -v;
    for (;;) {
      if (lx.eat('+')) v = v + term();
      else if (lx.eat('-')) v = v - term();
      else return v;
    }
  }
  MultiPoly term() {
    MultiPoly v = factor();
    for (;;) {
      if (lx.eat('*')) {
        v = v * factor();
      } else if (lx.eat('/')) {
        MultiPoly d = factor();
        if (!d.is_constant())
          fail(errc::invalid_input, "division by non-constant polynomial");
        v = v.scaled(d.constant_value().inverse());
      } else {
        return v;
      }
    }
  }
  MultiPoly factor() {
    MultiPoly v = atom();
    if (lx.eat('^')) {
      lx.skip();
      size_t q = lx.p;
      while (lx.p < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.p])) ++lx.p;
      if (lx.p == q) fail(errc::invalid_input, "bad exponent");
      v = v.pow(std::stol(lx.s.substr(q, lx.p - q)));
    }
    return v;
  }
  MultiPoly atom() {
    lx.skip();
    if (lx.eat('(')) {
      MultiPoly v = expr();
      if (!lx.eat(')')) fail(errc::invalid_input, "missing ')'");
      return v;
    }
    if (lx.p >= lx.s.size()) fail(errc::invalid_input, "truncated expression");
    char c = lx.s[lx.p];
    if (std::isdigit((unsigned char)c)) {
      size_t q = lx.p;
      while (q < lx.s.size() && std::isdigit((unsigned char)lx.s[q])) ++q;
      Rat val = parse_rat(lx.s.substr(lx.p, q - lx.p));
      lx.p = q;
      return MultiPoly::constant(vars, AlgNum(val));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t q = lx.p;
      while (q < lx.s.size() &&
             (std::isalnum((unsigned char)lx.s[q]) || lx.s[q] == '_'))
        ++q;
      std::string name = lx.s.substr(lx.p, q - lx.p);
      lx.p = q;
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return MultiPoly::variable(vars, (int)i);
      int lev = tw->find_level(name);
      if (lev < 0) fail(errc::invalid_input, "unknown name: " + name);
      return MultiPoly::constant(vars, AlgNum::generator(tw, lev));
    }
    fail(errc::invalid_input, std::string("unexpected character '") + c + "'");
  }
};

} // namespace

MultiPoly parse_multipoly(const TowerPtr& tw,
                          const std::vector<std::string>& vars,
                          const std::string& text) {
  PParser ps{PLexer{text}, tw, vars};
  MultiPoly v = ps.expr();
  ps.lx.skip();
  if (ps.lx.p != text.size())
    fail(errc::invalid_input, "trailing junk in polynomial: " + text);
  return v;
}

// ------------------------- resultant / discriminant --------------------------

namespace {

// Newton interpolation through (nodes[i], values[i]); nodes distinct rationals.
UPoly interpolate(const std::vector<Rat>& nodes,
                  const std::vector<AlgNum>& values) {
  size_t n = nodes.size();
  std::vector<AlgNum> dd(values); // divided differences, in place
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = n - 1; i >= lvl; --i) {
      Rat den = nodes[i] - nodes[i - lvl];
      dd[i] = (dd[i] - dd[i - 1]) * AlgNum(Rat(1) / den);
      if (i == lvl) break;
    }
  UPoly p;
  for (size_t i = n; i-- > 0;) {
    UPoly lin(std::vector<AlgNum>{AlgNum(-nodes[i]), AlgNum(1L)});
    p = p * lin + UPoly::constant(dd[i]);
  }
  return p;
}

} // namespace

MultiPoly resultant_elim(const MultiPoly& f, const MultiPoly& g,
                         const std::string& var) {
  if (f.is_zero() || g.is_zero())
    fail(errc::invalid_input, "resultant of zero polynomial");
  int vi = f.var_index(var);
  if (vi < 0 || g.var_index(var) != vi)
    fail(errc::invalid_input, "variable not shared: " + var);
  if (f.degree(vi) < 1 && g.degree(vi) < 1)
    fail(errc::invalid_input, "variable absent from both polynomials: " + var);
  // locate the other active variable (at most one)
  int other = -1;
  for (size_t i = 0; i < f.vars().size(); ++i) {
    if ((int)i == vi) continue;
    if (f.degree((int)i) > 0 || g.degree((int)i) > 0) {
      if (other >= 0)
        fail(errc::invalid_input, "resultant_elim supports at most 2 variables");
      other = (int)i;
    }
  }
  int df = std::max(f.degree(vi), 0), dg = std::max(g.degree(vi), 0);
  if (other < 0) {
    AlgNum r = resultant(f.to_upoly(vi), g.to_upoly(vi));
    return MultiPoly::constant(f.vars(), r);
  }
  auto fc = f.coeffs_in(vi);
  auto gc = g.coeffs_in(vi);
  const MultiPoly& lf = fc.back();
  const MultiPoly& lg = gc.back();
  int bound = df * std::max(g.degree(other), 0) +
              dg * std::max(f.degree(other), 0);
  std::vector<Rat> nodes;
  std::vector<AlgNum> values;
  long k = 0;
  while ((int)nodes.size() < bound + 1) {
    Rat node(k);
    k = k <= 0 ? -k + 1 : -k; // 0, 1, -1, 2, -2, ...
    AlgNum lf_v = lf.eval(std::vector<AlgNum>(f.vars().size(), AlgNum(node)));
    AlgNum lg_v = lg.eval(std::vector<AlgNum>(f.vars().size(), AlgNum(node)));
    if (lf_v.is_zero() || lg_v.is_zero()) continue; // keep formal degrees
    std::vector<AlgNum> fv((size_t)df + 1), gv((size_t)dg + 1);
    std::vector<AlgNum> pt(f.vars().size(), AlgNum(node));
    for (int i = 0; i <= df; ++i) fv[(size_t)i] = fc[(size_t)i].eval(pt);
    for (int i = 0; i <= dg; ++i) gv[(size_t)i] = gc[(size_t)i].eval(pt);
    values.push_back(resultant(UPoly(std::move(fv)), UPoly(std::move(gv))));
    nodes.push_back(node);
    if (k > 100000) fail(errc::resource, "resultant: node budget exhausted");
  }
  UPoly r = interpolate(nodes, values);
  return MultiPoly::from_upoly(r, f.vars(), other);
}

MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
  int vi = f.var_index(var);
  if (vi < 0 || f.degree(vi) < 2)
    fail(errc::invalid_input, "discriminant needs degree >= 2 in " + var);
  return resultant_elim(f, f.derivative(vi), var);
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  AlgNum ratio = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second != ib->second * ratio) return false;
  }
  return true;
}

} // namespace curvetopo
