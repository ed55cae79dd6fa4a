#include "imult/puiseux.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace imult {

namespace {

std::int64_t scaled_exponent(const Rational& q, std::int64_t e) {
  Rational s = q * Rational(static_cast<long>(e));
  if (!is_integer(s)) throw Error(ErrorCode::InvalidArgument, "exponent not on the ramification grid");
  return to_int64(s);
}

std::int64_t needed_ramification(const Rational& q, std::int64_t e) {
  return lcm64(e, to_int64(Integer(q.get_den())));
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::int64_t ramification, Terms terms, std::optional<std::int64_t> truncation)
    : e_(ramification), terms_(std::move(terms)), trunc_(truncation) {
  if (e_ <= 0) throw Error(ErrorCode::InvalidArgument, "ramification must be positive");
  normalize();
}

PuiseuxSeries PuiseuxSeries::constant(const AlgNum& c) { return PuiseuxSeries(1, {{0, c}}, std::nullopt); }

PuiseuxSeries PuiseuxSeries::monomial(const AlgNum& c, const Rational& exponent) {
  std::int64_t e = needed_ramification(exponent, 1);
  return PuiseuxSeries(e, {{scaled_exponent(exponent, e), c}}, std::nullopt);
}

PuiseuxSeries PuiseuxSeries::from_unipoly(const UniPoly& p) {
  Terms t(p.terms().begin(), p.terms().end());
  return PuiseuxSeries(1, std::move(t), std::nullopt);
}

PuiseuxSeries PuiseuxSeries::unknown(const Rational& order) {
  std::int64_t e = needed_ramification(order, 1);
  return PuiseuxSeries(e, {}, scaled_exponent(order, e));
}

void PuiseuxSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || (trunc_ && it->first >= *trunc_)) it = terms_.erase(it);
    else ++it;
  }
  std::int64_t g = e_;
  for (const auto& [k, c] : terms_) g = gcd64(g, k);
  if (trunc_) g = gcd64(g, *trunc_);
  if (g <= 1) return;
  Terms t;
  for (auto& [k, c] : terms_) t.emplace(k / g, std::move(c));
  terms_ = std::move(t);
  if (trunc_) *trunc_ /= g;
  e_ /= g;
}

PuiseuxSeries PuiseuxSeries::with_ramification(std::int64_t e) const {
  if (e == e_) return *this;
  std::int64_t f = e / e_;
  PuiseuxSeries r;
  r.e_ = e;
  for (const auto& [k, c] : terms_) r.terms_.emplace(checked_mul(k, f), c);
  if (trunc_) r.trunc_ = checked_mul(*trunc_, f);
  return r;
}

std::optional<Rational> PuiseuxSeries::truncation_order() const {
  if (!trunc_) return std::nullopt;
  return make_rational(*trunc_, e_);
}

Tower PuiseuxSeries::tower() const {
  Tower t;
  for (const auto& [k, c] : terms_)
    if (!c.is_rational()) t = common_tower(t, c.tower());
  return t;
}

TruncatedValue PuiseuxSeries::val() const {
  if (!terms_.empty()) return {ExtRational(make_rational(terms_.begin()->first, e_)), true};
  return {ExtRational::infinity(), !trunc_};
}

TruncatedValue PuiseuxSeries::certified_val() const {
  if (!terms_.empty()) terms_.begin()->second.inverse();
  return val();
}

ExtRational PuiseuxSeries::known_val() const {
  if (!terms_.empty()) return make_rational(terms_.begin()->first, e_);
  if (trunc_) return make_rational(*trunc_, e_);
  return ExtRational::infinity();
}

AlgNum PuiseuxSeries::coeff(const Rational& exponent) const {
  if (trunc_ && exponent >= make_rational(*trunc_, e_))
    throw Error(ErrorCode::TruncationExhausted, "coefficient beyond truncation");
  Rational s = exponent * Rational(static_cast<long>(e_));
  if (!is_integer(s)) return AlgNum();
  auto it = terms_.find(to_int64(s));
  return it == terms_.end() ? AlgNum() : it->second;
}

const AlgNum& PuiseuxSeries::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::TruncationExhausted, "series has no known term");
  return terms_.begin()->second;
}

Rational PuiseuxSeries::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::TruncationExhausted, "series has no known term");
  return make_rational(terms_.begin()->first, e_);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

namespace {

std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::int64_t e = lcm64(a.e_, b.e_);
  PuiseuxSeries A = a.with_ramification(e), B = b.with_ramification(e);
  A.trunc_ = min_opt(A.trunc_, B.trunc_);
  for (const auto& [k, c] : B.terms_) {
    auto [it, inserted] = A.terms_.emplace(k, c);
    if (!inserted) it->second += c;
  }
  A.normalize();
  return A;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_canonical_zero() || b.is_canonical_zero()) return PuiseuxSeries();
  std::int64_t e = lcm64(a.e_, b.e_);
  PuiseuxSeries A = a.with_ramification(e), B = b.with_ramification(e);
  auto low = [](const PuiseuxSeries& s) { return s.terms_.empty() ? *s.trunc_ : s.terms_.begin()->first; };
  std::optional<std::int64_t> t;
  if (A.trunc_) t = min_opt(t, checked_add(low(B), *A.trunc_));
  if (B.trunc_) t = min_opt(t, checked_add(low(A), *B.trunc_));
  PuiseuxSeries r;
  r.e_ = e;
  r.trunc_ = t;
  for (const auto& [ka, ca] : A.terms_) {
    for (const auto& [kb, cb] : B.terms_) {
      std::int64_t k = checked_add(ka, kb);
      if (t && k >= *t) break;
      auto [it, inserted] = r.terms_.emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  r.normalize();
  return r;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a.e_ == b.e_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

PuiseuxSeries PuiseuxSeries::scaled(const AlgNum& c) const {
  PuiseuxSeries r = *this;
  for (auto& [k, x] : r.terms_) x *= c;
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::pow(std::uint64_t n) const {
  PuiseuxSeries result = constant(AlgNum(1)), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

PuiseuxSeries PuiseuxSeries::derivative(std::uint64_t n) const {
  PuiseuxSeries cur = *this;
  for (std::uint64_t i = 0; i < n; ++i) {
    PuiseuxSeries r;
    r.e_ = cur.e_;
    if (cur.trunc_) r.trunc_ = checked_sub(*cur.trunc_, cur.e_);
    for (const auto& [k, c] : cur.terms_) {
      if (k == 0) continue;
      r.terms_.emplace(checked_sub(k, cur.e_), c * AlgNum(make_rational(k, cur.e_)));
    }
    r.normalize();
    cur = std::move(r);
  }
  return cur;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  std::int64_t e = needed_ramification(order, e_);
  PuiseuxSeries r = with_ramification(e);
  r.trunc_ = min_opt(r.trunc_, scaled_exponent(order, e));
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& shift) const {
  std::int64_t e = needed_ramification(shift, e_);
  PuiseuxSeries src = with_ramification(e);
  std::int64_t s = scaled_exponent(shift, e);
  PuiseuxSeries r;
  r.e_ = e;
  for (const auto& [k, c] : src.terms_) r.terms_.emplace(checked_add(k, s), c);
  if (src.trunc_) r.trunc_ = checked_add(*src.trunc_, s);
  r.normalize();
  return r;
}

PuiseuxSeries PuiseuxSeries::project(const Tower& target) const {
  PuiseuxSeries r = *this;
  for (auto& [k, c] : r.terms_) c = imult::project(c, target);
  r.normalize();
  return r;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& other) const {
  std::int64_t e = lcm64(e_, other.e_);
  PuiseuxSeries A = with_ramification(e), B = other.with_ramification(e);
  std::optional<std::int64_t> limit = min_opt(A.trunc_, B.trunc_);
  auto below = [&](std::int64_t k) { return !limit || k < *limit; };
  for (const auto& [k, c] : A.terms_) {
    if (!below(k)) break;
    auto it = B.terms_.find(k);
    if (it == B.terms_.end() || !(it->second == c)) return false;
  }
  for (const auto& [k, c] : B.terms_) {
    if (!below(k)) break;
    if (!A.terms_.count(k)) return false;
  }
  return true;
}

std::string PuiseuxSeries::to_string() const {
  std::string out;
  auto exponent_text = [this](std::int64_t k) {
    Rational q = make_rational(k, e_);
    if (q == 0) return std::string();
    if (q == 1) return std::string("x");
    if (is_integer(q) && sgn(q) > 0) return "x^" + imult::to_string(q);
    return "x^(" + imult::to_string(q) + ")";
  };
  for (const auto& [k, c] : terms_) {
    std::string mono = exponent_text(k);
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    AlgNum mag = negative ? -c : c;
    std::string coef;
    if (mono.empty()) coef = coeff_text(mag);
    else if (!mag.is_one()) coef = coeff_text(mag) + "*";
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += coef + mono;
  }
  if (trunc_) {
    std::string o = "O(" + (*trunc_ == 0 ? std::string("1") : exponent_text(*trunc_)) + ")";
    out = out.empty() ? o : out + " + " + o;
  }
  return out.empty() ? "0" : out;
}

PuiseuxSeries eval_on_series(const BiPoly& F, const AlgNum& a, const AlgNum& b, const PuiseuxSeries& S,
                             std::optional<Rational> cap) {
  BiPoly shifted = F.translate(a, b);
  auto coeffs = shifted.y_coefficients();
  auto cut = [&cap](PuiseuxSeries s) { return cap ? s.truncated(*cap) : s; };
  PuiseuxSeries step = cut(S);
  PuiseuxSeries acc;
  std::int64_t prev = -1;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (prev >= 0)
      for (std::int64_t i = it->first; i < prev; ++i) acc = cut(acc * step);
    acc = cut(acc + PuiseuxSeries::from_unipoly(it->second));
    prev = it->first;
  }
  for (std::int64_t i = 0; i < prev; ++i) acc = cut(acc * step);
  return acc;
}

PuiseuxSeries wronskian(const std::vector<PuiseuxSeries>& series) {
  std::size_t n = series.size();
  if (n == 0) return PuiseuxSeries::constant(AlgNum(1));
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "wronskian of too many series");
  std::vector<std::vector<PuiseuxSeries>> m(n, std::vector<PuiseuxSeries>(n));
  for (std::size_t j = 0; j < n; ++j) {
    PuiseuxSeries d = series[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (!d.has_terms() && !d.is_exact())
        throw Error(ErrorCode::TruncationExhausted, "derivative has no determinable term");
      m[i][j] = d;
      if (i + 1 < n) d = d.derivative();
    }
  }
  std::vector<PuiseuxSeries> dp(std::size_t{1} << n);
  std::vector<bool> seen(dp.size(), false);
  dp[0] = PuiseuxSeries::constant(AlgNum(1));
  seen[0] = true;
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (!seen[mask]) continue;
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      int inversions = std::popcount(mask >> (j + 1));
      PuiseuxSeries term = dp[mask] * m[row][j];
      if (inversions % 2) term = -term;
      std::size_t next = mask | (std::size_t{1} << j);
      dp[next] = seen[next] ? dp[next] + term : term;
      seen[next] = true;
    }
  }
  return dp.back();
}

}  // namespace imult
