#include "imult/identities.hpp"

#include <mutex>

#include "imult/bipoly_gcd.hpp"

namespace imult {

std::uint64_t hajos_max_multiplicity(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity of roots of the zero polynomial");
  std::int64_t v = f.valuation();
  UniPoly g = f.shifted(-v);
  UniPoly chain = g;
  std::uint64_t mult = 0;
  for (std::uint64_t j = 1; chain.degree().value_or(0) > 0; ++j) {
    mult = j;
    chain = gcd(chain, g.derivative(j));
  }
  return mult;
}

std::int64_t shift_positive_count(const BiPoly& G, const Point& p) {
  if (p.a.is_zero() || p.b.is_zero()) throw Error(ErrorCode::InvalidArgument, "shift point needs nonzero coordinates");
  if (G.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "shift of the zero polynomial");
  return positive_valuation_count(G.translate(p.a, p.b));
}

std::uint64_t weight(const SeqPartition& s) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) w += (i + 1) * s[i];
  return w;
}

std::uint64_t size(const SeqPartition& s) {
  std::uint64_t n = 0;
  for (auto v : s) n += v;
  return n;
}

namespace {

void trim(SeqPartition& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

void partitions_rec(std::uint64_t rest, std::uint64_t part, SeqPartition& cur, std::vector<SeqPartition>& out) {
  if (rest == 0) {
    SeqPartition s = cur;
    trim(s);
    out.push_back(std::move(s));
    return;
  }
  if (part == 0) return;
  for (std::uint64_t c = rest / part + 1; c-- > 0;) {
    cur[part - 1] = c;
    partitions_rec(rest - c * part, part - 1, cur, out);
  }
  cur[part - 1] = 0;
}

using XiTable = std::map<SeqPartition, Rational>;

// d/dx of S^{n-|s|} prod (S^{(l)})^{s_l}.
XiTable differentiate(std::uint64_t n, const XiTable& table) {
  XiTable next;
  for (const auto& [s, c] : table) {
    std::uint64_t sz = size(s);
    if (sz < n) {
      SeqPartition t = s;
      if (t.empty()) t.resize(1);
      t[0] += 1;
      next[t] += c * Rational(static_cast<unsigned long>(n - sz));
    }
    for (std::size_t l = 0; l < s.size(); ++l) {
      if (s[l] == 0) continue;
      SeqPartition t = s;
      t[l] -= 1;
      if (t.size() < l + 2) t.resize(l + 2);
      t[l + 1] += 1;
      trim(t);
      next[t] += c * Rational(static_cast<unsigned long>(s[l]));
    }
  }
  return next;
}

const XiTable& xi_table(std::uint64_t n, std::uint64_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, XiTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (std::uint64_t j = 0; j <= k; ++j) {
    if (cache.count({n, j})) continue;
    if (j == 0) cache.emplace(std::make_pair(n, j), XiTable{{SeqPartition{}, Rational(1)}});
    else cache.emplace(std::make_pair(n, j), differentiate(n, cache.at({n, j - 1})));
  }
  return cache.at({n, k});
}

}  // namespace

std::vector<SeqPartition> seq_partitions(std::uint64_t k) {
  std::vector<SeqPartition> out;
  SeqPartition cur(k, 0);
  partitions_rec(k, k, cur, out);
  return out;
}

Integer xi_constant(std::uint64_t n, const SeqPartition& s) {
  SeqPartition t = s;
  trim(t);
  const XiTable& table = xi_table(n, weight(t));
  auto it = table.find(t);
  if (it == table.end()) return 0;
  if (!is_integer(it->second)) throw Error(ErrorCode::HypothesisViolated, "non-integral power-derivative constant");
  return it->second.get_num();
}

PowerDerivative derivative_of_power(const PuiseuxSeries& S, std::uint64_t n, std::uint64_t k) {
  if (S.is_canonical_zero()) throw Error(ErrorCode::InvalidArgument, "power derivative of the zero series");
  PowerDerivative out;
  out.direct = S.pow(n).derivative(k);
  if (!out.direct.has_terms() && !out.direct.is_exact())
    throw Error(ErrorCode::TruncationExhausted, "series too short for the requested derivative");
  std::vector<PuiseuxSeries> ders{S};
  for (std::uint64_t l = 1; l <= k; ++l) ders.push_back(ders.back().derivative());
  for (const auto& s : seq_partitions(k)) {
    Integer xi = xi_constant(n, s);
    if (xi == 0) continue;
    PuiseuxSeries term = S.pow(n - size(s)).scaled(AlgNum(xi));
    for (std::size_t l = 0; l < s.size(); ++l)
      if (s[l] > 0) term *= ders[l + 1].pow(s[l]);
    out.structured += term;
    out.terms.push_back({s, xi, std::move(term)});
  }
  return out;
}

namespace {

// Symbolic A_p, B_{p,q}, C_{p,q} in the variables x[p,q] = d^{p,q}F along the root.
class RootDerivatives {
 public:
  IndexedRatPoly C(std::int64_t p, std::int64_t q) {
    return IndexedRatPoly::variable({p, q}) *
           IndexedRatPoly::variable({0, 1}, static_cast<std::uint64_t>(2 * p + q - 2));
  }

  const IndexedRatPoly& A(std::int64_t p) {
    auto it = a_.find(p);
    if (it != a_.end()) return it->second;
    IndexedRatPoly r = C(p, 0).scaled(Rational(-1));
    for (std::int64_t l = 1; l < p; ++l)
      r = r - (A(l) * B(p - l, 0)).scaled(Rational(binomial(p, l)));
    return a_.emplace(p, std::move(r)).first->second;
  }

  const IndexedRatPoly& B(std::int64_t p, std::int64_t q) {
    auto key = std::make_pair(p, q);
    auto it = b_.find(key);
    if (it != b_.end()) return it->second;
    IndexedRatPoly r = C(p, q + 1);
    for (std::int64_t l = 1; l <= p; ++l) r = r + (A(l) * B(p - l, q + 1)).scaled(Rational(binomial(p, l)));
    r = r.scaled(make_rational(1, q + 1));
    return b_.emplace(key, std::move(r)).first->second;
  }

 private:
  std::map<std::int64_t, IndexedRatPoly> a_;
  std::map<std::pair<std::int64_t, std::int64_t>, IndexedRatPoly> b_;
};

std::mutex& identity_mutex() {
  static std::mutex mu;
  return mu;
}

RootDerivatives& root_derivatives() {
  static RootDerivatives rd;
  return rd;
}

}  // namespace

const IndexedIntPoly& build_R(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "R_k needs k >= 1");
  static std::map<std::uint64_t, IndexedIntPoly> cache;
  std::lock_guard<std::mutex> lock(identity_mutex());
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  IndexedIntPoly r = to_integer_poly(root_derivatives().A(static_cast<std::int64_t>(k)));
  if (r.degree() > static_cast<std::int64_t>(2 * k - 1))
    throw Error(ErrorCode::HypothesisViolated, "R_k exceeds its degree bound");
  return cache.emplace(k, std::move(r)).first->second;
}

const ScaledIntPoly& build_Rbar(std::uint64_t k, std::uint64_t l) {
  if (k + l == 0) throw Error(ErrorCode::InvalidArgument, "Rbar_{k,l} needs k + l >= 1");
  static std::map<std::pair<std::uint64_t, std::uint64_t>, ScaledIntPoly> cache;
  std::lock_guard<std::mutex> lock(identity_mutex());
  auto key = std::make_pair(k, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ScaledIntPoly r = clear_denominators(root_derivatives().B(static_cast<std::int64_t>(k), static_cast<std::int64_t>(l)));
  if (r.numerator.degree() > static_cast<std::int64_t>(2 * k + l))
    throw Error(ErrorCode::HypothesisViolated, "Rbar_{k,l} exceeds its degree bound");
  return cache.emplace(key, std::move(r)).first->second;
}

bool verify_root_derivative_identity(const BiPoly& F, const Branch& branch, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "derivative order must be positive");
  const PuiseuxSeries& S = branch.series;
  const IndexedIntPoly& R = build_R(k);
  auto along = [&](VarIndex v) {
    BiPoly D = F.partial_derivative(static_cast<std::uint64_t>(v.p), static_cast<std::uint64_t>(v.q));
    return eval_on_series(D, AlgNum(0), AlgNum(0), S);
  };
  PuiseuxSeries Fy = along({0, 1});
  if (!Fy.has_terms()) throw Error(ErrorCode::TruncationExhausted, "F_y vanishes to the known precision along the branch");
  PuiseuxSeries lhs = S.derivative(k) * Fy.pow(2 * k - 1);
  PuiseuxSeries rhs = evaluate(R, along);
  PuiseuxSeries diff = lhs - rhs;
  if (diff.has_terms()) return false;
  if (!diff.is_exact() && !lhs.has_terms() && !rhs.has_terms())
    throw Error(ErrorCode::TruncationExhausted, "no known terms to compare");
  return true;
}

SumValCheck sum_val_bound_check(const BiPoly& F, const BiPoly& G, const Point& p) {
  if (p.a.is_zero() || p.b.is_zero()) throw Error(ErrorCode::InvalidArgument, "point needs nonzero coordinates");
  if (F.is_zero() || G.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sum of valuations with a zero polynomial");
  if (divides(F, G)) throw Error(ErrorCode::HypothesisViolated, "G is divisible by F");
  MultiplicityResult r = halphen_multiplicity(F, G, p, 1);
  if (r.infinite) throw Error(ErrorCode::HypothesisViolated, "F and G share a component through the point");
  SumValCheck out;
  out.sum = 0;
  for (const auto& s : r.summands) out.sum += s.val * Rational(static_cast<unsigned long>(s.weight));
  Rational d = static_cast<long>(*F.total_degree());
  Rational t = static_cast<long>(G.term_count());
  out.bound = d * (4 * d + 1) * t * (t - 1) / 2;
  out.ok = out.sum <= out.bound;
  return out;
}

}  // namespace imult
