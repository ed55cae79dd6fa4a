#include "imult/unipoly.hpp"

#include <climits>

namespace imult {

UniPoly::UniPoly(const AlgNum& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

UniPoly::UniPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

UniPoly UniPoly::monomial(const AlgNum& c, std::int64_t e) {
  UniPoly p;
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

UniPoly UniPoly::from_dense(const dense::Poly& p) {
  UniPoly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) r.terms_.emplace(static_cast<std::int64_t>(i), p[i]);
  return r;
}

std::optional<std::int64_t> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::int64_t UniPoly::valuation() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
  return terms_.begin()->first;
}

AlgNum UniPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlgNum() : it->second;
}

const AlgNum& UniPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.rbegin()->second;
}

Tower UniPoly::tower() const {
  Tower t;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) t = common_tower(t, c.tower());
  return t;
}

void UniPoly::add_term(std::int64_t e, const AlgNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), ca * cb);
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

UniPoly UniPoly::scaled(const AlgNum& c) const {
  UniPoly r;
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result(AlgNum(1)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

UniPoly UniPoly::derivative(std::uint64_t n) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    if (static_cast<std::uint64_t>(e) < n) continue;
    Integer f = 1;
    for (std::uint64_t i = 0; i < n; ++i) f *= static_cast<long>(e - static_cast<std::int64_t>(i));
    r.add_term(e - static_cast<std::int64_t>(n), c * AlgNum(f));
  }
  return r;
}

UniPoly UniPoly::shifted(std::int64_t shift) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    std::int64_t ne = checked_add(e, shift);
    if (ne < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent after shift");
    r.terms_.emplace(ne, c);
  }
  return r;
}

AlgNum UniPoly::eval(const AlgNum& z) const {
  AlgNum acc;
  std::int64_t prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0) acc *= z.pow(static_cast<std::uint64_t>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= z.pow(static_cast<std::uint64_t>(prev));
  return acc;
}

UniPoly UniPoly::project(const Tower& target) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, imult::project(c, target));
  return r;
}

dense::Poly UniPoly::to_dense() const {
  if (terms_.empty()) return {};
  dense::Poly p(static_cast<std::size_t>(terms_.rbegin()->first) + 1);
  for (const auto& [e, c] : terms_) p[e] = c;
  return p;
}

std::string coeff_text(const AlgNum& c) {
  if (c.is_rational()) return imult::to_string(c.rational());
  return "[" + c.to_string() + "]";
}

std::string UniPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
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

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::int64_t db = *b.degree();
  UniPoly r = a, q;
  AlgNum inv = b.leading_coeff().inverse();
  while (!r.is_zero() && *r.degree() >= db) {
    std::int64_t dr = *r.degree();
    UniPoly t = UniPoly::monomial(r.leading_coeff() * inv, dr - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  std::int64_t va = a.is_zero() ? INT64_MAX : a.valuation();
  std::int64_t vb = b.is_zero() ? INT64_MAX : b.valuation();
  std::int64_t v = std::min(va, vb);
  UniPoly x = a.is_zero() ? a : a.shifted(-va), y = b.is_zero() ? b : b.shifted(-vb);
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  x = x.scaled(x.leading_coeff().inverse());
  return x.shifted(v);
}

}  // namespace imult
