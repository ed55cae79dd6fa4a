#include "imult/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace imult {

BiPoly::BiPoly(const AlgNum& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

BiPoly::BiPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (e.x < 0 || e.y < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

BiPoly BiPoly::monomial(const AlgNum& c, std::int64_t ex, std::int64_t ey) {
  if (ex < 0 || ey < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{ex, ey}, c);
  return p;
}

BiPoly BiPoly::in_x(const UniPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_.emplace(Exponent{e, 0}, c);
  return r;
}

BiPoly BiPoly::in_y(const UniPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_.emplace(Exponent{0, e}, c);
  return r;
}

BiPoly BiPoly::from_y_coefficients(const std::map<std::int64_t, UniPoly>& coeffs) {
  BiPoly r;
  for (const auto& [k, p] : coeffs)
    for (const auto& [e, c] : p.terms()) r.terms_.emplace(Exponent{e, k}, c);
  return r;
}

std::optional<std::int64_t> BiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, checked_add(e.x, e.y));
  return d;
}

std::optional<std::int64_t> BiPoly::degree_x() const {
  if (terms_.empty()) return std::nullopt;
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

std::optional<std::int64_t> BiPoly::degree_y() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.y;
}

AlgNum BiPoly::coeff(std::int64_t ex, std::int64_t ey) const {
  auto it = terms_.find(Exponent{ex, ey});
  return it == terms_.end() ? AlgNum() : it->second;
}

Tower BiPoly::tower() const {
  Tower t;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) t = common_tower(t, c.tower());
  return t;
}

void BiPoly::add_term(const Exponent& e, const AlgNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(Exponent{checked_add(ea.x, eb.x), checked_add(ea.y, eb.y)}, ca * cb);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

BiPoly BiPoly::scaled(const AlgNum& c) const {
  BiPoly r;
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

BiPoly BiPoly::pow(std::uint64_t e) const {
  BiPoly result(AlgNum(1)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {

Integer falling(std::int64_t n, std::uint64_t k) {
  Integer f = 1;
  for (std::uint64_t i = 0; i < k; ++i) f *= static_cast<long>(n - static_cast<std::int64_t>(i));
  return f;
}

}  // namespace

BiPoly BiPoly::partial_derivative(std::uint64_t p, std::uint64_t q) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (static_cast<std::uint64_t>(e.x) < p || static_cast<std::uint64_t>(e.y) < q) continue;
    Integer f = falling(e.x, p) * falling(e.y, q);
    r.terms_.emplace(Exponent{e.x - static_cast<std::int64_t>(p), e.y - static_cast<std::int64_t>(q)},
                     c * AlgNum(f));
  }
  return r;
}

AlgNum BiPoly::eval(const AlgNum& a, const AlgNum& b) const {
  AlgNum acc;
  for (const auto& [e, c] : terms_)
    acc += c * a.pow(static_cast<std::uint64_t>(e.x)) * b.pow(static_cast<std::uint64_t>(e.y));
  return acc;
}

BiPoly BiPoly::translate(const AlgNum& a, const AlgNum& b) const {
  BiPoly r;
  std::map<std::int64_t, AlgNum> apow, bpow;
  auto power = [](std::map<std::int64_t, AlgNum>& cache, const AlgNum& base, std::int64_t n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    AlgNum v = base.pow(static_cast<std::uint64_t>(n));
    cache.emplace(n, v);
    return v;
  };
  for (const auto& [e, c] : terms_) {
    std::int64_t kmin = a.is_zero() ? e.x : 0;
    std::int64_t lmin = b.is_zero() ? e.y : 0;
    for (std::int64_t k = kmin; k <= e.x; ++k) {
      AlgNum ck = c * AlgNum(binomial(e.x, k)) * power(apow, a, e.x - k);
      for (std::int64_t l = lmin; l <= e.y; ++l)
        r.add_term(Exponent{k, l}, ck * AlgNum(binomial(e.y, l)) * power(bpow, b, e.y - l));
    }
  }
  return r;
}

BiPoly BiPoly::compose_affine(const AffineMap& L) const {
  BiPoly u = BiPoly::x().scaled(L.m11) + BiPoly::y().scaled(L.m12) + BiPoly(L.t1);
  BiPoly v = BiPoly::x().scaled(L.m21) + BiPoly::y().scaled(L.m22) + BiPoly(L.t2);
  std::map<std::int64_t, BiPoly> upow, vpow;
  auto power = [](std::map<std::int64_t, BiPoly>& cache, const BiPoly& base, std::int64_t n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BiPoly p = base.pow(static_cast<std::uint64_t>(n));
    cache.emplace(n, p);
    return p;
  };
  BiPoly r;
  for (const auto& [e, c] : terms_) r += (power(upow, u, e.x) * power(vpow, v, e.y)).scaled(c);
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.y, e.x}, c);
  return r;
}

UniPoly BiPoly::substitute_y(const UniPoly& s) const {
  UniPoly acc;
  std::int64_t prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend();) {
    std::int64_t k = it->first.y;
    UniPoly fk;
    for (; it != terms_.rend() && it->first.y == k; ++it) fk += UniPoly::monomial(it->second, it->first.x);
    if (prev >= 0) acc *= s.pow(static_cast<std::uint64_t>(prev - k));
    acc += fk;
    prev = k;
  }
  if (prev > 0) acc *= s.pow(static_cast<std::uint64_t>(prev));
  return acc;
}

BiPoly BiPoly::project(const Tower& target) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, imult::project(c, target));
  return r;
}

std::map<std::int64_t, UniPoly> BiPoly::y_coefficients() const {
  std::map<std::int64_t, UniPoly::Terms> acc;
  for (const auto& [e, c] : terms_) acc[e.y].emplace(e.x, c);
  std::map<std::int64_t, UniPoly> out;
  for (auto& [k, t] : acc) out.emplace(k, UniPoly(std::move(t)));
  return out;
}

std::int64_t BiPoly::x_divisibility() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "divisibility of the zero polynomial");
  std::int64_t m = INT64_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.x);
  return m;
}

std::int64_t BiPoly::y_divisibility() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "divisibility of the zero polynomial");
  return terms_.begin()->first.y;
}

BiPoly BiPoly::divided_by_monomial(std::int64_t ex, std::int64_t ey) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.x < ex || e.y < ey) throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
    r.terms_.emplace(Exponent{e.x - ex, e.y - ey}, c);
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // graded by total degree, then by x exponent, highest first
  std::vector<std::pair<Exponent, AlgNum>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    std::int64_t da = a.first.x + a.first.y, db = b.first.x + b.first.y;
    if (da != db) return da > db;
    return a.first.x > b.first.x;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    auto append = [&mono](const char* var, std::int64_t n) {
      if (n == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (n > 1) mono += "^" + std::to_string(n);
    };
    append("x", e.x);
    append("y", e.y);
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    AlgNum mag = negative ? -c : c;
    std::string coef;
    if (mono.empty()) coef = coeff_text(mag);
    else if (!mag.is_one()) coef = coeff_text(mag) + "*";
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += coef + mono;
  }
  return out;
}

AffineMap AffineMap::translation(const AlgNum& a, const AlgNum& b) {
  AffineMap L;
  L.t1 = a;
  L.t2 = b;
  return L;
}

AffineMap AffineMap::swap() {
  AffineMap L;
  L.m11 = AlgNum();
  L.m12 = AlgNum(1);
  L.m21 = AlgNum(1);
  L.m22 = AlgNum();
  return L;
}

AffineMap AffineMap::inverse() const {
  AlgNum det = determinant();
  if (det.is_zero()) throw Error(ErrorCode::InvalidArgument, "singular affine map");
  AlgNum inv = det.inverse();
  AffineMap r;
  r.m11 = m22 * inv;
  r.m12 = -m12 * inv;
  r.m21 = -m21 * inv;
  r.m22 = m11 * inv;
  r.t1 = -(r.m11 * t1 + r.m12 * t2);
  r.t2 = -(r.m21 * t1 + r.m22 * t2);
  return r;
}

std::pair<AlgNum, AlgNum> AffineMap::apply(const AlgNum& x, const AlgNum& y) const {
  return {m11 * x + m12 * y + t1, m21 * x + m22 * y + t2};
}

}  // namespace imult
