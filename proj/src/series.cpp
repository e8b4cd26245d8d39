#include "curvetopo/series.hpp"

#include <sstream>

namespace curvetopo {

namespace {
std::optional<AlgNum> combine(const std::optional<AlgNum>& a,
                              const std::optional<AlgNum>& b,
                              AlgNum (*op)(const AlgNum&, const AlgNum&)) {
  if (!a || !b) return std::nullopt;
  AlgNum x = *a, y = *b;
  if (!x.tower()->is_prefix_of(*y.tower()) &&
      !y.tower()->is_prefix_of(*x.tower()))
    return std::nullopt;
  return op(x, y);
}
AlgNum add_op(const AlgNum& a, const AlgNum& b) { return a + b; }
AlgNum sub_op(const AlgNum& a, const AlgNum& b) { return a - b; }
AlgNum mul_op(const AlgNum& a, const AlgNum& b) { return a * b; }
} // namespace

XNum operator+(const XNum& a, const XNum& b) {
  XNum r(a.box + b.box);
  r.exact = combine(a.exact, b.exact, add_op);
  if (r.exact) r.box = r.exact->approx();
  return r;
}
XNum operator-(const XNum& a, const XNum& b) {
  XNum r(a.box - b.box);
  r.exact = combine(a.exact, b.exact, sub_op);
  if (r.exact) r.box = r.exact->approx();
  return r;
}
XNum operator*(const XNum& a, const XNum& b) {
  XNum r(a.box * b.box);
  r.exact = combine(a.exact, b.exact, mul_op);
  if (r.exact) r.box = r.exact->approx();
  return r;
}
XNum operator/(const XNum& a, const XNum& b) {
  if (b.known_zero()) fail(errc::invalid_input, "division by zero");
  if (a.exact && b.exact &&
      (a.exact->tower()->is_prefix_of(*b.exact->tower()) ||
       b.exact->tower()->is_prefix_of(*a.exact->tower()))) {
    XNum r(*a.exact / *b.exact);
    return r;
  }
  return XNum(a.box / b.box);
}
XNum operator-(const XNum& a) {
  XNum r(-a.box);
  if (a.exact) {
    r.exact = -*a.exact;
    r.box = r.exact->approx();
  }
  return r;
}
XNum xnum_pow(const XNum& a, long e) {
  if (a.exact) return XNum(a.exact->pow(e));
  return XNum(pow_int(a.box, e));
}

std::string XNum::str() const {
  if (exact) return exact->str();
  std::ostringstream os;
  os << "[" << box.c.real();
  if (box.c.imag() != 0) os << (box.c.imag() < 0 ? "" : "+") << box.c.imag() << "i";
  os << " r=" << box.r << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

void PSeries::set_trunc(int t) {
  trunc_ = t;
  auto it = terms_.lower_bound(t);
  terms_.erase(it, terms_.end());
}

void PSeries::add_term(int e, const XNum& c) {
  if (e >= trunc_) return;
  if (c.known_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    XNum s = it->second + c;
    if (s.known_zero())
      terms_.erase(it);
    else
      it->second = s;
  }
}

XNum PSeries::coeff(int e) const {
  auto it = terms_.find(e);
  if (it != terms_.end()) return it->second;
  return XNum(AlgNum());
}

std::optional<int> PSeries::valuation() const {
  for (auto& [e, c] : terms_) {
    if (c.known_nonzero()) return e;
    if (c.ambiguous())
      fail(errc::undecidable,
           "series valuation blocked by an ambiguous coefficient at t^" +
               std::to_string(e));
  }
  return std::nullopt;
}

PSeries PSeries::shifted(int k) const {
  PSeries r(trunc_ + k);
  for (auto& [e, c] : terms_) r.add_term(e + k, c);
  return r;
}

PSeries PSeries::twisted(const XNum& zeta) const {
  PSeries r(trunc_);
  for (auto& [e, c] : terms_) r.add_term(e, c * xnum_pow(zeta, e));
  return r;
}

PSeries operator+(const PSeries& a, const PSeries& b) {
  PSeries r(std::min(a.trunc_, b.trunc_));
  for (auto& [e, c] : a.terms_) r.add_term(e, c);
  for (auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) {
  PSeries r(std::min(a.trunc_, b.trunc_));
  for (auto& [e, c] : a.terms_) r.add_term(e, c);
  for (auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

PSeries operator*(const PSeries& a, const PSeries& b) {
  // trunc of product: min over (trunc_a + val_b, trunc_b + val_a), using
  // stored minimal exponents as safe valuation lower bounds
  int va = a.terms_.empty() ? a.trunc_ : a.terms_.begin()->first;
  int vb = b.terms_.empty() ? b.trunc_ : b.terms_.begin()->first;
  int tr = std::min(a.trunc_ + vb, b.trunc_ + va);
  PSeries r(tr);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      if (ea + eb >= tr) continue;
      r.add_term(ea + eb, ca * cb);
    }
  return r;
}

PSeries PSeries::operator-() const {
  PSeries r(trunc_);
  for (auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

PSeries PSeries::scaled(const XNum& s) const {
  PSeries r(trunc_);
  for (auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

PSeries PSeries::pow(long e) const {
  if (e < 0) fail(errc::invalid_input, "negative series power");
  long long big = (long long)trunc_ * (e > 1 ? e : 1) + 64;
  PSeries acc((int)std::min(big, (long long)(1 << 28)));
  acc.add_term(0, XNum(AlgNum(1L)));
  PSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

PSeries PSeries::derivative() const {
  PSeries r(trunc_ - 1);
  for (auto& [e, c] : terms_) {
    if (e == 0) continue;
    r.add_term(e - 1, c * XNum(AlgNum((long)e)));
  }
  return r;
}

PSeries PSeries::compose(const PSeries& inner) const {
  int vi = inner.terms_.empty() ? std::max(inner.trunc_, 1)
                                : inner.terms_.begin()->first;
  if (vi < 1) fail(errc::invalid_input, "composition needs valuation >= 1");
  long long cap = (long long)trunc_ * vi;
  PSeries acc((int)std::min(cap, (long long)(1 << 28)));
  PSeries cur(acc.trunc());
  cur.add_term(0, XNum(AlgNum(1L)));
  int have = 0;
  for (auto& [e, c] : terms_) {
    while (have < e) {
      cur = cur * inner;
      ++have;
    }
    acc = acc + cur.scaled(c);
  }
  return acc;
}

PSeries PSeries::inverse() const {
  auto it = terms_.find(0);
  if (it == terms_.end() || !it->second.known_nonzero())
    fail(errc::invalid_input, "series inverse needs nonzero constant term");
  XNum c0inv = XNum(AlgNum(1L)) / it->second;
  // Newton iteration g <- g(2 - f g)
  PSeries g(1);
  g.add_term(0, c0inv);
  int prec = 1;
  while (prec < trunc_) {
    prec = std::min(2 * prec, trunc_);
    PSeries f = *this;
    f.set_trunc(prec);
    PSeries two(prec);
    two.add_term(0, XNum(AlgNum(2L)));
    PSeries fg = f * g;
    fg.set_trunc(prec);
    PSeries h = two - fg;
    g = g * h;
    g.set_trunc(prec);
  }
  return g;
}

cball PSeries::eval_ball(const cball& t) const {
  cball acc(0.0);
  for (auto& [e, c] : terms_) acc = acc + c.box * pow_int(t, e);
  return acc;
}

std::string PSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << var << "^" << e;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << trunc_ << ")";
  return os.str();
}

PSeries eval_on_series(const MultiPoly& f, const std::vector<PSeries>& coords) {
  if (coords.size() != f.vars().size())
    fail(errc::invalid_input, "eval_on_series arity mismatch");
  int tr = 1 << 30;
  for (auto& s : coords) tr = std::min(tr, s.trunc());
  // crude but safe common truncation: min over coordinate truncs
  PSeries acc(tr);
  for (auto& [e, c] : f.terms()) {
    PSeries term(tr);
    term.add_term(0, XNum(c));
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * coords[i].pow(e[i]);
    term.set_trunc(std::min(term.trunc(), tr));
    acc = acc + term;
  }
  return acc;
}

} // namespace curvetopo
