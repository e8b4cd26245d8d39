#include "curvetopo/tower.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curvetopo {

TowerPtr Tower::rationals() {
  static TowerPtr q = std::make_shared<Tower>();
  return q;
}

TowerPtr Tower::extend(const std::string& name, int deg,
                       const std::vector<Rat>& rad_coords, cplx hint) const {
  if (deg < 2) fail(errc::invalid_input, "extension degree must be >= 2");
  if ((int)rad_coords.size() != dim_)
    fail(errc::invalid_input, "radicand coordinate size mismatch");
  if (find_level(name) >= 0)
    fail(errc::invalid_input, "duplicate extension name: " + name);
  bool all_zero = std::all_of(rad_coords.begin(), rad_coords.end(),
                              [](const Rat& q) { return q == 0; });
  if (all_zero) fail(errc::invalid_input, "zero radicand for " + name);

  auto t = std::make_shared<Tower>(*this);
  Level lv;
  lv.name = name;
  lv.deg = deg;
  lv.rad = rad_coords;
  {
    // recursive horner over the existing levels
    struct Ev {
      const Tower* tw;
      cball run(int lev, const Rat* c) const {
        if (lev == 0) {
          double d = c[0].get_d();
          return cball(d, 0.0, std::abs(d) * 4e-16 + 1e-300);
        }
        const Level& L = tw->levels_[lev - 1];
        int B = tw->dim_below_[lev - 1];
        cball acc(0.0);
        for (int i = L.deg - 1; i >= 0; --i)
          acc = acc * L.gen + run(lev - 1, c + (size_t)i * B);
        return acc;
      }
    } ev{this};
    cball radval = ev.run((int)levels_.size(), rad_coords.data());
    lv.gen = kth_root_near(radval, deg, hint);
  }
  t->levels_.push_back(lv);
  t->dim_below_.push_back(dim_ * deg);
  t->dim_ = dim_ * deg;
  return t;
}

bool Tower::is_prefix_of(const Tower& big) const {
  if (levels_.size() > big.levels_.size()) return false;
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& a = levels_[i];
    const Level& b = big.levels_[i];
    if (a.name != b.name || a.deg != b.deg || a.rad != b.rad) return false;
  }
  return true;
}

bool Tower::same_as(const Tower& other) const {
  return levels_.size() == other.levels_.size() && is_prefix_of(other);
}

int Tower::find_level(const std::string& name) const {
  for (size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].name == name) return (int)i;
  return -1;
}

// ---------------------------------------------------------------------------

AlgNum::AlgNum() : tw_(Tower::rationals()), co_(1, Rat(0)) {}
AlgNum::AlgNum(const Rat& q) : tw_(Tower::rationals()), co_(1, q) {}
AlgNum::AlgNum(long n) : tw_(Tower::rationals()), co_(1, Rat(n)) {}
AlgNum::AlgNum(TowerPtr tw, std::vector<Rat> coords)
    : tw_(std::move(tw)), co_(std::move(coords)) {
  if ((int)co_.size() != tw_->dim())
    fail(errc::invalid_input, "coordinate size mismatch");
}

AlgNum AlgNum::generator(const TowerPtr& tw, int level) {
  if (level < 0 || level >= tw->num_levels())
    fail(errc::invalid_input, "no such tower level");
  std::vector<Rat> co(tw->dim(), Rat(0));
  co[tw->dim_below(level)] = 1;
  return AlgNum(tw, std::move(co));
}

AlgNum AlgNum::basis_monomial(const TowerPtr& tw, int flat_index) {
  std::vector<Rat> co(tw->dim(), Rat(0));
  co.at(flat_index) = 1;
  return AlgNum(tw, std::move(co));
}

bool AlgNum::is_zero() const {
  return std::all_of(co_.begin(), co_.end(), [](const Rat& q) { return q == 0; });
}

bool AlgNum::is_rational() const {
  for (size_t i = 1; i < co_.size(); ++i)
    if (co_[i] != 0) return false;
  return true;
}

Rat AlgNum::rat_value() const {
  if (!is_rational()) fail(errc::invalid_input, "not a rational value");
  return co_[0];
}

AlgNum AlgNum::embedded(const TowerPtr& big) const {
  if (tw_->same_as(*big)) return AlgNum(big, co_);
  if (!tw_->is_prefix_of(*big))
    fail(errc::invalid_input, "incompatible towers");
  std::vector<Rat> co(big->dim(), Rat(0));
  std::copy(co_.begin(), co_.end(), co.begin());
  return AlgNum(big, std::move(co));
}

void align(AlgNum& a, AlgNum& b) {
  if (a.tower()->same_as(*b.tower())) return;
  if (a.tower()->is_prefix_of(*b.tower())) {
    a = a.embedded(b.tower());
  } else if (b.tower()->is_prefix_of(*a.tower())) {
    b = b.embedded(a.tower());
  } else {
    fail(errc::invalid_input, "incompatible towers");
  }
}

AlgNum operator+(const AlgNum& a0, const AlgNum& b0) {
  AlgNum a = a0, b = b0;
  align(a, b);
  std::vector<Rat> co(a.co_);
  for (size_t i = 0; i < co.size(); ++i) co[i] += b.co_[i];
  return AlgNum(a.tw_, std::move(co));
}

AlgNum operator-(const AlgNum& a0, const AlgNum& b0) {
  AlgNum a = a0, b = b0;
  align(a, b);
  std::vector<Rat> co(a.co_);
  for (size_t i = 0; i < co.size(); ++i) co[i] -= b.co_[i];
  return AlgNum(a.tw_, std::move(co));
}

AlgNum AlgNum::operator-() const {
  std::vector<Rat> co(co_);
  for (auto& q : co) q = -q;
  return AlgNum(tw_, std::move(co));
}

namespace {

// out += a*b, all elements of the sub-tower spanned by the first `lev`
// levels of tw (block size tw.dim_below(lev)).
void mul_rec(const Tower& tw, int lev, const Rat* a, const Rat* b, Rat* out) {
  if (lev == 0) {
    if (a[0] != 0 && b[0] != 0) out[0] += a[0] * b[0];
    return;
  }
  const auto& L = tw.level(lev - 1);
  int B = tw.dim_below(lev - 1);
  int d = L.deg;
  std::vector<Rat> tmp((size_t)(2 * d - 1) * B, Rat(0));
  for (int i = 0; i < d; ++i) {
    bool az = true;
    for (int t = 0; t < B; ++t)
      if (a[(size_t)i * B + t] != 0) { az = false; break; }
    if (az) continue;
    for (int j = 0; j < d; ++j)
      mul_rec(tw, lev - 1, a + (size_t)i * B, b + (size_t)j * B,
              tmp.data() + (size_t)(i + j) * B);
  }
  // reduce g^{e} = rad * g^{e-d} for e >= d
  for (int e = 2 * d - 2; e >= d; --e) {
    mul_rec(tw, lev - 1, tmp.data() + (size_t)e * B, L.rad.data(),
            tmp.data() + (size_t)(e - d) * B);
  }
  for (int i = 0; i < d; ++i)
    for (int t = 0; t < B; ++t) out[(size_t)i * B + t] += tmp[(size_t)i * B + t];
}

} // namespace

AlgNum operator*(const AlgNum& a0, const AlgNum& b0) {
  AlgNum a = a0, b = b0;
  align(a, b);
  std::vector<Rat> co(a.tw_->dim(), Rat(0));
  mul_rec(*a.tw_, a.tw_->num_levels(), a.co_.data(), b.co_.data(), co.data());
  return AlgNum(a.tw_, std::move(co));
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) fail(errc::invalid_input, "division by zero");
  int n = tw_->dim();
  if (n == 1) return AlgNum(tw_, {Rat(1) / co_[0]});
  // Solve (mult-by-this) x = 1 over Q.
  std::vector<std::vector<Rat>> M((size_t)n, std::vector<Rat>((size_t)n + 1, Rat(0)));
  std::vector<Rat> col((size_t)n);
  for (int j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), Rat(0));
    std::vector<Rat> unit((size_t)n, Rat(0));
    unit[(size_t)j] = 1;
    mul_rec(*tw_, tw_->num_levels(), co_.data(), unit.data(), col.data());
    for (int i = 0; i < n; ++i) M[(size_t)i][(size_t)j] = col[(size_t)i];
  }
  M[0][(size_t)n] = 1;
  // gaussian elimination
  for (int c = 0, r = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (M[(size_t)i][(size_t)c] != 0) { p = i; break; }
    if (p < 0)
      fail(errc::zero_divisor,
           "zero divisor: a declared extension is reducible");
    std::swap(M[(size_t)p], M[(size_t)r]);
    Rat inv = Rat(1) / M[(size_t)r][(size_t)c];
    for (int k = c; k <= n; ++k) M[(size_t)r][(size_t)k] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || M[(size_t)i][(size_t)c] == 0) continue;
      Rat f = M[(size_t)i][(size_t)c];
      for (int k = c; k <= n; ++k) M[(size_t)i][(size_t)k] -= f * M[(size_t)r][(size_t)k];
    }
    ++r;
  }
  std::vector<Rat> x((size_t)n);
  for (int i = 0; i < n; ++i) x[(size_t)i] = M[(size_t)i][(size_t)n];
  return AlgNum(tw_, std::move(x));
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum acc(Rat(1)), base = *this;
  acc = acc.embedded(tw_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const AlgNum& a0, const AlgNum& b0) {
  AlgNum a = a0, b = b0;
  align(a, b);
  return a.co_ == b.co_;
}

cball AlgNum::approx() const {
  struct Ev {
    const Tower* tw;
    cball run(int lev, const Rat* c) const {
      if (lev == 0) {
        double d = c[0].get_d();
        return cball(d, 0.0, std::abs(d) * 4e-16 + 1e-300);
      }
      const auto& L = tw->level(lev - 1);
      int B = tw->dim_below(lev - 1);
      cball acc(0.0);
      for (int i = L.deg - 1; i >= 0; --i)
        acc = acc * L.gen + run(lev - 1, c + (size_t)i * B);
      return acc;
    }
  } ev{tw_.get()};
  return ev.run(tw_->num_levels(), co_.data());
}

std::string AlgNum::str() const {
  std::ostringstream os;
  bool first = true;
  int n = tw_->dim();
  for (int idx = 0; idx < n; ++idx) {
    if (co_[(size_t)idx] == 0) continue;
    Rat q = co_[(size_t)idx];
    if (!first) {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    std::string mono;
    int rem = idx;
    for (int l = 0; l < tw_->num_levels(); ++l) {
      int d = tw_->level(l).deg;
      int e = rem % d;
      rem /= d;
      if (e > 0) {
        if (!mono.empty()) mono += "*";
        mono += tw_->level(l).name;
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    if (mono.empty()) {
      os << rat_str(q);
    } else if (q == 1) {
      os << mono;
    } else if (q == -1 && first) {
      os << "-" << mono;
    } else {
      os << rat_str(q) << "*" << mono;
    }
  }
  if (first) os << "0";
  return os.str();
}

// --------------------------- expression parser ------------------------------

namespace {

struct Lexer {
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

AlgNum parse_atom(Lexer& lx, const TowerPtr& tw) {
  lx.skip();
  if (lx.p >= lx.s.size()) fail(errc::invalid_input, "truncated expression: " + lx.s);
  char c = lx.s[lx.p];
  if (std::isdigit((unsigned char)c)) {
    size_t q = lx.p;
    while (q < lx.s.size() && std::isdigit((unsigned char)lx.s[q])) ++q;
    Rat val = parse_rat(lx.s.substr(lx.p, q - lx.p));
    lx.p = q;
    return AlgNum(val);
  }
  if (std::isalpha((unsigned char)c) || c == '_') {
    size_t q = lx.p;
    while (q < lx.s.size() &&
           (std::isalnum((unsigned char)lx.s[q]) || lx.s[q] == '_'))
      ++q;
    std::string name = lx.s.substr(lx.p, q - lx.p);
    lx.p = q;
    int lev = tw->find_level(name);
    if (lev < 0) fail(errc::invalid_input, "unknown extension name: " + name);
    AlgNum g = AlgNum::generator(tw, lev);
    if (lx.eat('^')) {
      lx.skip();
      size_t e0 = lx.p;
      while (lx.p < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.p])) ++lx.p;
      if (lx.p == e0) fail(errc::invalid_input, "bad exponent in: " + lx.s);
      long e = std::stol(lx.s.substr(e0, lx.p - e0));
      g = g.pow(e);
    }
    return g;
  }
  fail(errc::invalid_input, std::string("unexpected character '") + c + "' in: " + lx.s);
}

AlgNum parse_term(Lexer& lx, const TowerPtr& tw) {
  AlgNum v = parse_atom(lx, tw);
  for (;;) {
    if (lx.eat('*')) {
      v = v * parse_atom(lx, tw);
    } else if (lx.eat('/')) {
      v = v / parse_atom(lx, tw);
    } else {
      return v;
    }
  }
}

} // namespace

AlgNum parse_algnum(const TowerPtr& tw, const std::string& text) {
  Lexer lx{text};
  bool neg = lx.eat('-');
  AlgNum v = parse_term(lx, tw);
  if (neg) v = -v;
  for (;;) {
    if (lx.eat('+')) {
      v = v + parse_term(lx, tw);
    } else if (lx.eat('-')) {
      v = v - parse_term(lx, tw);
    } else {
      break;
    }
  }
  lx.skip();
  if (lx.p != lx.s.size())
    fail(errc::invalid_input, "trailing junk in expression: " + text);
  return v;
}

} // namespace curvetopo
