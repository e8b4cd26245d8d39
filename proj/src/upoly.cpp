#include "curvetopo/upoly.hpp"

#include <sstream>

namespace curvetopo {

UPoly::UPoly(std::vector<AlgNum> coeffs) : co_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const AlgNum& c) {
  UPoly p;
  if (!c.is_zero()) p.co_ = {c};
  return p;
}

UPoly UPoly::monomial(const AlgNum& c, int e) {
  UPoly p;
  if (c.is_zero()) return p;
  p.co_.assign((size_t)e + 1, AlgNum());
  p.co_[(size_t)e] = c;
  return p;
}

void UPoly::trim() {
  while (!co_.empty() && co_.back().is_zero()) co_.pop_back();
}

const AlgNum& UPoly::operator[](int i) const {
  static const AlgNum zero;
  if (i < 0 || i >= (int)co_.size()) return zero;
  return co_[(size_t)i];
}

const AlgNum& UPoly::lc() const {
  if (co_.empty()) fail(errc::invalid_input, "lc of zero polynomial");
  return co_.back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<AlgNum> co(std::max(a.co_.size(), b.co_.size()), AlgNum());
  for (size_t i = 0; i < a.co_.size(); ++i) co[i] = a.co_[i];
  for (size_t i = 0; i < b.co_.size(); ++i) co[i] = co[i] + b.co_[i];
  return UPoly(std::move(co));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<AlgNum> co(std::max(a.co_.size(), b.co_.size()), AlgNum());
  for (size_t i = 0; i < a.co_.size(); ++i) co[i] = a.co_[i];
  for (size_t i = 0; i < b.co_.size(); ++i) co[i] = co[i] - b.co_[i];
  return UPoly(std::move(co));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<AlgNum> co(a.co_.size() + b.co_.size() - 1, AlgNum());
  for (size_t i = 0; i < a.co_.size(); ++i) {
    if (a.co_[i].is_zero()) continue;
    for (size_t j = 0; j < b.co_.size(); ++j) {
      if (b.co_[j].is_zero()) continue;
      co[i + j] = co[i + j] + a.co_[i] * b.co_[j];
    }
  }
  return UPoly(std::move(co));
}

UPoly UPoly::operator-() const {
  std::vector<AlgNum> co(co_);
  for (auto& c : co) c = -c;
  return UPoly(std::move(co));
}

UPoly UPoly::scaled(const AlgNum& s) const {
  std::vector<AlgNum> co(co_);
  for (auto& c : co) c = c * s;
  return UPoly(std::move(co));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

UPoly UPoly::derivative() const {
  if (co_.size() <= 1) return UPoly();
  std::vector<AlgNum> co(co_.size() - 1, AlgNum());
  for (size_t i = 1; i < co_.size(); ++i) co[i - 1] = co_[i] * AlgNum((long)i);
  return UPoly(std::move(co));
}

UPoly UPoly::pow(long e) const {
  UPoly acc = UPoly::constant(AlgNum(1L)), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
  std::vector<AlgNum> rem = a.co_;
  std::vector<AlgNum> quo;
  int db = b.deg();
  AlgNum inv_lc = b.lc().inverse();
  if ((int)rem.size() - 1 >= db) quo.assign(rem.size() - (size_t)db, AlgNum());
  for (int i = (int)rem.size() - 1; i >= db; --i) {
    if (rem[(size_t)i].is_zero()) continue;
    AlgNum f = rem[(size_t)i] * inv_lc;
    quo[(size_t)(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[(size_t)(i - db + j)] = rem[(size_t)(i - db + j)] - f * b.co_[(size_t)j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::operator/(const UPoly& b) const {
  UPoly q, r;
  divrem(*this, b, q, r);
  return q;
}

UPoly UPoly::operator%(const UPoly& b) const {
  UPoly q, r;
  divrem(*this, b, q, r);
  return r;
}

AlgNum UPoly::eval(const AlgNum& x) const {
  AlgNum acc;
  for (int i = (int)co_.size() - 1; i >= 0; --i) acc = acc * x + co_[(size_t)i];
  return acc;
}

cball UPoly::eval_ball(const cball& x) const {
  cball acc(0.0);
  for (int i = (int)co_.size() - 1; i >= 0; --i)
    acc = acc * x + co_[(size_t)i].approx();
  return acc;
}

UPoly UPoly::shifted(const AlgNum& a) const {
  // horner: p(x+a)
  UPoly acc;
  UPoly lin(std::vector<AlgNum>{a, AlgNum(1L)});
  for (int i = (int)co_.size() - 1; i >= 0; --i)
    acc = acc * lin + UPoly::constant(co_[(size_t)i]);
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (co_[(size_t)i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << co_[(size_t)i].str() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

AlgNum resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero())
    fail(errc::invalid_input, "resultant of zero polynomial");
  if (a.deg() == 0) return a.lc().pow(b.deg());
  if (b.deg() == 0) return b.lc().pow(a.deg());
  UPoly r = a % b;
  if (r.is_zero()) return AlgNum();
  AlgNum sign = (a.deg() * b.deg()) % 2 == 1 ? AlgNum(-1L) : AlgNum(1L);
  return sign * b.lc().pow((long)(a.deg() - r.deg())) * resultant(b, r);
}

std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& p) {
  if (p.is_zero()) fail(errc::invalid_input, "squarefree of zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (p.deg() == 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly g = gcd(f, fp);
  if (g.deg() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UPoly c = f / g;
  UPoly d = fp / g - c.derivative();
  int i = 1;
  while (c.deg() > 0) {
    UPoly q = gcd(c, d);
    if (q.deg() > 0) out.emplace_back(q.monic(), i);
    c = c / q;
    d = d / q - c.derivative();
    ++i;
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  auto dec = squarefree_decompose(p);
  UPoly out = UPoly::constant(AlgNum(1L));
  for (auto& [f, m] : dec) out = out * f;
  return out;
}

} // namespace curvetopo
