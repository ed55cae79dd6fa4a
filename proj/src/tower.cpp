#include "imult/tower.hpp"

#include <sstream>

#include "imult/dense_poly.hpp"

namespace imult {

bool operator==(const Rep& a, const Rep& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return a.q == b.q;
  return a.c == b.c;
}

namespace {

Rep make_rep(std::uint32_t level, std::vector<Rep> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) return Rep();
  if (c.size() == 1) return std::move(c[0]);
  Rep r;
  r.level = level;
  r.c = std::move(c);
  return r;
}

Rep rep_neg(const Rep& a) {
  if (a.level == 0) return Rep(-a.q);
  Rep r = a;
  for (auto& x : r.c) x = rep_neg(x);
  return r;
}

Rep rep_add(const Rep& a, const Rep& b) {
  if (a.level == 0 && b.level == 0) return Rep(a.q + b.q);
  if (a.level < b.level) return rep_add(b, a);
  std::vector<Rep> c = a.c;
  if (a.level == b.level) {
    if (c.size() < b.c.size()) c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = rep_add(c[i], b.c[i]);
  } else {
    c[0] = rep_add(c[0], b);
  }
  return make_rep(a.level, std::move(c));
}

Rep rep_mul(const Rep& a, const Rep& b, const TowerLevel* top);

// Reduces sum c[i] z^i modulo the level-L modulus of `top`.
Rep reduce_at(std::uint32_t level, std::vector<Rep> c, const TowerLevel* top) {
  const auto& m = top->at(level)->modulus();
  std::size_t n = m.size() - 1;
  for (std::size_t i = c.size(); i-- > n;) {
    if (c[i].is_zero()) continue;
    Rep lead = c[i];
    for (std::size_t j = 0; j < n; ++j)
      c[i - n + j] = rep_add(c[i - n + j], rep_neg(rep_mul(lead, m[j], top)));
    c[i] = Rep();
  }
  if (c.size() > n) c.resize(n);
  return make_rep(level, std::move(c));
}

Rep rep_mul(const Rep& a, const Rep& b, const TowerLevel* top) {
  if (a.is_zero() || b.is_zero()) return Rep();
  if (a.level == 0 && b.level == 0) return Rep(a.q * b.q);
  if (a.level < b.level) return rep_mul(b, a, top);
  if (a.level > b.level) {
    std::vector<Rep> c;
    c.reserve(a.c.size());
    for (const auto& x : a.c) c.push_back(rep_mul(x, b, top));
    return make_rep(a.level, std::move(c));
  }
  std::vector<Rep> c(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = rep_add(c[i + j], rep_mul(a.c[i], b.c[j], top));
  }
  return reduce_at(a.level, std::move(c), top);
}

// Rebuilds `a` bottom-up, reducing modulo the moduli of `top`.
Rep rep_reduce(const Rep& a, const TowerLevel* top) {
  if (a.level == 0) return a;
  std::vector<Rep> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(rep_reduce(x, top));
  return reduce_at(a.level, std::move(c), top);
}

Rep rep_shift(const Rep& a, std::uint32_t above, std::uint32_t shift) {
  if (a.level <= above) return a;
  Rep r = a;
  r.level += shift;
  for (auto& x : r.c) x = rep_shift(x, above, shift);
  return r;
}

std::string rep_string(const Rep& a) {
  if (a.level == 0) return to_string(a.q);
  std::string tag = "z" + std::to_string(a.level);
  std::string out;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    const Rep& ci = a.c[i];
    if (ci.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? tag : tag + "^" + std::to_string(i));
    std::string coef;
    bool negative = false;
    if (ci.level == 0) {
      Rational q = ci.q;
      if (sgn(q) < 0) {
        negative = true;
        q = -q;
      }
      if (mono.empty()) coef = to_string(q);
      else if (q != 1) coef = to_string(q) + "*";
    } else {
      coef = "(" + rep_string(ci) + ")" + (mono.empty() ? "" : "*");
    }
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += coef + mono;
  }
  return out;
}

const TowerLevel* top_of(const Tower& t) { return t.get(); }

Tower tower_for(const AlgNum& a, const AlgNum& b) {
  if (a.tower() == b.tower()) return a.tower();
  if (is_prefix(a.tower(), b.tower())) return b.tower();
  if (is_prefix(b.tower(), a.tower())) return a.tower();
  if (a.is_rational()) return b.tower();
  if (b.is_rational()) return a.tower();
  throw Error(ErrorCode::InvalidArgument, "tower elements from incompatible towers");
}

}  // namespace

TowerLevel::TowerLevel(Tower parent, std::vector<Rep> modulus)
    : parent_(std::move(parent)), depth_(tower_depth(parent_) + 1), modulus_(std::move(modulus)) {
  if (parent_) path_ = parent_->path_;
  else path_.push_back(nullptr);
  path_.push_back(this);
}

std::uint32_t tower_depth(const Tower& t) { return t ? t->depth() : 0; }

Tower tower_prefix(const Tower& t, std::uint32_t depth) {
  if (depth == 0) return nullptr;
  if (depth > tower_depth(t)) throw Error(ErrorCode::InvalidArgument, "tower prefix deeper than tower");
  return t->at(depth)->shared_from_this();
}

bool is_prefix(const Tower& shorter, const Tower& longer) {
  std::uint32_t d = tower_depth(shorter);
  if (d == 0) return true;
  return d <= tower_depth(longer) && longer->at(d) == shorter.get();
}

Tower common_tower(const Tower& a, const Tower& b) {
  if (is_prefix(a, b)) return b;
  if (is_prefix(b, a)) return a;
  throw Error(ErrorCode::InvalidArgument, "towers have no common extension");
}

std::uint64_t conjugate_count(const Tower& t, std::uint32_t base_depth) {
  std::uint64_t n = 1;
  for (std::uint32_t d = base_depth + 1; d <= tower_depth(t); ++d) n *= t->at(d)->degree();
  return n;
}

AlgNum::AlgNum(Tower tower, Rep rep) : tower_(std::move(tower)), rep_(std::move(rep)) {
  if (rep_.level > tower_depth(tower_)) throw Error(ErrorCode::InvalidArgument, "representative above tower");
}

const Rational& AlgNum::rational() const {
  if (rep_.level != 0) throw Error(ErrorCode::InvalidArgument, "element is not rational");
  return rep_.q;
}

AlgNum AlgNum::lifted(const Tower& tower) const {
  if (tower == tower_) return *this;
  if (!is_prefix(tower_, tower) && !is_rational())
    throw Error(ErrorCode::InvalidArgument, "lift target does not extend the tower");
  return AlgNum(tower, rep_);
}

AlgNum AlgNum::operator-() const { return AlgNum(tower_, rep_neg(rep_)); }

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  Tower t = tower_for(a, b);
  return AlgNum(t, rep_add(a.rep_, b.rep_));
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  Tower t = tower_for(a, b);
  return AlgNum(t, rep_add(a.rep_, rep_neg(b.rep_)));
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  Tower t = tower_for(a, b);
  return AlgNum(t, rep_mul(a.rep_, b.rep_, top_of(t)));
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (a.is_rational() && b.is_rational()) return a.rep_.q == b.rep_.q;
  tower_for(a, b);
  return a.rep_ == b.rep_;
}

AlgNum AlgNum::pow(std::uint64_t e) const {
  AlgNum result = AlgNum(tower_, Rep(Rational(1)));
  AlgNum base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

AlgNum AlgNum::inverse() const {
  if (rep_.level == 0) {
    if (sgn(rep_.q) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return AlgNum(tower_, Rep(1 / rep_.q));
  }
  std::uint32_t level = rep_.level;
  Tower below = tower_prefix(tower_, level - 1);
  dense::Poly a;
  for (const auto& x : rep_.c) a.emplace_back(below, x);
  dense::Poly m = level_modulus(tower_, level);
  dense::ExtGcd eg = dense::ext_gcd_mod(a, m);
  if (dense::degree(eg.g) > 0) {
    dense::Poly h = dense::exact_div(m, eg.g);
    throw ZeroDivisor(tower_prefix(tower_, level), eg.g, h);
  }
  std::vector<Rep> c;
  for (const auto& x : eg.s) c.push_back(x.lifted(below).rep());
  return AlgNum(tower_, make_rep(level, std::move(c)));
}

std::string AlgNum::to_string() const { return rep_string(rep_); }

ZeroDivisor::ZeroDivisor(Tower node, std::vector<AlgNum> factor, std::vector<AlgNum> cofactor)
    : node_(std::move(node)), factor_(std::move(factor)), cofactor_(std::move(cofactor)) {
  message_ = "zero divisor at tower level " + std::to_string(tower_depth(node_));
}

std::uint32_t ZeroDivisor::depth() const { return tower_depth(node_); }

InvertResult try_invert(const AlgNum& a) {
  try {
    return a.inverse();
  } catch (const ZeroDivisor& zd) {
    return zd;
  }
}

std::string modulus_text(const Tower& t, std::uint32_t depth) {
  if (!t || depth < 1 || depth > t->depth()) throw Error(ErrorCode::InvalidArgument, "no such tower level");
  Rep r;
  r.level = depth;
  r.c = t->at(depth)->modulus();
  return rep_string(r);
}

AlgNum tower_generator(const Tower& t) {
  if (!t) throw Error(ErrorCode::InvalidArgument, "rationals have no generator");
  std::vector<Rep> c(2);
  c[1] = Rep(Rational(1));
  Rep r = make_rep(t->depth(), std::move(c));
  if (t->degree() < 2) r = rep_reduce(r, t.get());
  return AlgNum(t, r);
}

namespace {

Tower make_level(const Tower& base, const dense::Poly& modulus) {
  std::vector<Rep> m;
  m.reserve(modulus.size());
  for (const auto& x : modulus) m.push_back(x.lifted(base).rep());
  return std::make_shared<const TowerLevel>(base, std::move(m));
}

}  // namespace

Tower adjoin_level(const Tower& base, const std::vector<AlgNum>& monic_modulus) {
  dense::Poly m = monic_modulus;
  dense::trim(m);
  if (dense::degree(m) < 2 || !m.back().is_one())
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree at least 2");
  return make_level(base, m);
}

std::vector<AlgNum> level_modulus(const Tower& t, std::uint32_t depth) {
  Tower below = tower_prefix(t, depth - 1);
  std::vector<AlgNum> out;
  for (const auto& x : t->at(depth)->modulus()) out.emplace_back(below, x);
  return out;
}

std::vector<RootClass> root_classes(const Tower& base, const std::vector<AlgNum>& poly) {
  dense::Poly p = poly;
  dense::trim(p);
  if (dense::degree(p) < 1) throw Error(ErrorCode::InvalidArgument, "root of a constant polynomial");
  Tower t = base;
  for (const auto& x : p) t = tower_for(AlgNum(t, Rep()), x);
  p = dense::squarefree_part(dense::monic(p));
  std::vector<RootClass> out;
  if (dense::all_rational(p)) {
    for (const auto& r : dense::rational_roots(p)) {
      out.push_back({AlgNum(t, Rep(r)), 1});
      p = dense::exact_div(p, dense::Poly{AlgNum(-r), AlgNum(1)});
    }
  }
  std::int64_t deg = dense::degree(p);
  if (deg == 1) {
    out.push_back({(-p[0]).lifted(t), 1});
  } else if (deg >= 2) {
    Tower ext = make_level(t, p);
    out.push_back({tower_generator(ext), static_cast<std::uint64_t>(deg)});
  }
  return out;
}

AlgNum adjoin_root(const Tower& base, const std::vector<AlgNum>& modulus) {
  auto roots = root_classes(base, modulus);
  for (const auto& r : roots)
    if (r.conjugates > 1) return r.root;
  return roots.front().root;
}

Tower split_tower(const Tower& t, const ZeroDivisor& zd, bool take_factor) {
  std::uint32_t d = zd.depth();
  if (d == 0 || d > tower_depth(t) || t->at(d) != zd.node().get())
    throw Error(ErrorCode::InvalidArgument, "zero divisor does not belong to this tower");
  Tower below = tower_prefix(t, d - 1);
  dense::Poly m = take_factor ? zd.factor() : zd.cofactor();
  for (auto& x : m) x = project(x, below);
  Tower cur = make_level(below, m);
  for (std::uint32_t L = d + 1; L <= tower_depth(t); ++L) {
    std::vector<Rep> mod;
    for (const auto& x : t->at(L)->modulus()) mod.push_back(rep_reduce(x, cur.get()));
    cur = std::make_shared<const TowerLevel>(cur, std::move(mod));
  }
  return cur;
}

AlgNum project(const AlgNum& a, const Tower& target) {
  if (is_prefix(a.tower(), target) || a.is_rational()) return AlgNum(target, a.rep());
  if (a.rep().level > tower_depth(target))
    throw Error(ErrorCode::InvalidArgument, "projection target too shallow");
  return AlgNum(target, rep_reduce(a.rep(), target.get()));
}

Graft graft(const Tower& base, const Tower& other, std::uint32_t common_depth) {
  Graft g;
  g.other = other;
  g.common_depth = common_depth;
  g.shift = tower_depth(base) - common_depth;
  Tower cur = base;
  for (std::uint32_t L = common_depth + 1; L <= tower_depth(other); ++L) {
    std::vector<Rep> mod;
    for (const auto& x : other->at(L)->modulus())
      mod.push_back(cur ? rep_reduce(rep_shift(x, common_depth, g.shift), cur.get()) : x);
    cur = std::make_shared<const TowerLevel>(cur, std::move(mod));
  }
  g.joint = cur;
  return g;
}

AlgNum graft_map(const Graft& g, const AlgNum& from_other) {
  if (from_other.is_rational()) return AlgNum(g.joint, from_other.rep());
  Rep r = rep_shift(from_other.rep(), g.common_depth, g.shift);
  return AlgNum(g.joint, rep_reduce(r, g.joint.get()));
}

}  // namespace imult
