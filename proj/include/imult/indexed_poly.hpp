#pragma once

// Polynomials in variables x[p,q] standing for the partial derivatives d^{p+q}F / dx^p dy^q.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "imult/puiseux.hpp"

namespace imult {

struct VarIndex {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Variable -> exponent, no zero exponents.
using IndexedMonomial = std::map<VarIndex, std::uint64_t>;

template <class Coeff>
class IndexedPoly {
 public:
  using Terms = std::map<IndexedMonomial, Coeff>;

  IndexedPoly() = default;
  explicit IndexedPoly(Terms terms) : terms_(std::move(terms)) { prune(); }
  static IndexedPoly constant(const Coeff& c) { return IndexedPoly(Terms{{IndexedMonomial{}, c}}); }
  static IndexedPoly variable(VarIndex v, std::uint64_t e = 1) {
    if (e == 0) return constant(Coeff(1));
    return IndexedPoly(Terms{{IndexedMonomial{{v, e}}, Coeff(1)}});
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) {
      std::int64_t s = 0;
      for (const auto& [v, e] : m) s += static_cast<std::int64_t>(e);
      d = std::max(d, s);
    }
    return d;
  }

  std::set<VarIndex> variables() const {
    std::set<VarIndex> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) out.insert(v);
    return out;
  }

  friend IndexedPoly operator+(const IndexedPoly& a, const IndexedPoly& b) {
    Terms t = a.terms_;
    for (const auto& [m, c] : b.terms_) t[m] += c;
    return IndexedPoly(std::move(t));
  }
  friend IndexedPoly operator-(const IndexedPoly& a, const IndexedPoly& b) { return a + b.scaled(Coeff(-1)); }
  friend IndexedPoly operator*(const IndexedPoly& a, const IndexedPoly& b) {
    Terms t;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        IndexedMonomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        t[m] += ca * cb;
      }
    return IndexedPoly(std::move(t));
  }
  friend bool operator==(const IndexedPoly&, const IndexedPoly&) = default;

  IndexedPoly scaled(const Coeff& c) const {
    Terms t;
    for (const auto& [m, v] : terms_) t.emplace(m, v * c);
    return IndexedPoly(std::move(t));
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0) it = terms_.erase(it);
      else ++it;
    }
  }

  Terms terms_;
};

using IndexedIntPoly = IndexedPoly<Integer>;
using IndexedRatPoly = IndexedPoly<Rational>;

/// "-x[1,0]", "2*x[1,0]*x[1,1]^2 - x[2,0]".
std::string to_string(const IndexedIntPoly& p);

/// Value at x[p,q] = value(p, q).
PuiseuxSeries evaluate(const IndexedIntPoly& p, const std::function<PuiseuxSeries(VarIndex)>& value);

/// Integer numerator over a positive integer denominator, in lowest terms.
struct ScaledIntPoly {
  IndexedIntPoly numerator;
  Integer denominator = 1;
  std::string to_string() const;
};

ScaledIntPoly clear_denominators(const IndexedRatPoly& p);
/// Throws HYPOTHESIS_VIOLATED when some coefficient is not an integer.
IndexedIntPoly to_integer_poly(const IndexedRatPoly& p);

}  // namespace imult
