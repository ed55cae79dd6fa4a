#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imult/bipoly.hpp"

namespace imult {

struct TruncatedValue {
  ExtRational value;
  /// false when the series is zero below its truncation but unknown beyond it.
  bool exact = true;
};

/// Puiseux series sum c_k x^{k/e}. Terms with exponent >= truncation / e are unknown;
/// an absent truncation means the series is known exactly.
class PuiseuxSeries {
 public:
  using Terms = std::map<std::int64_t, AlgNum>;

  PuiseuxSeries() = default;
  PuiseuxSeries(std::int64_t ramification, Terms terms, std::optional<std::int64_t> truncation);
  static PuiseuxSeries constant(const AlgNum& c);
  static PuiseuxSeries monomial(const AlgNum& c, const Rational& exponent);
  static PuiseuxSeries from_unipoly(const UniPoly& p);
  /// Zero below `order`, unknown from there on.
  static PuiseuxSeries unknown(const Rational& order);

  std::int64_t ramification() const { return e_; }
  const Terms& terms() const { return terms_; }
  /// Scaled truncation T (exponent T / e).
  const std::optional<std::int64_t>& truncation() const { return trunc_; }
  std::optional<Rational> truncation_order() const;
  bool is_exact() const { return !trunc_; }
  bool is_canonical_zero() const { return terms_.empty() && !trunc_; }
  bool has_terms() const { return !terms_.empty(); }
  Tower tower() const;

  TruncatedValue val() const;
  /// Valuation with the leading coefficient checked to be a unit; may raise ZeroDivisor.
  TruncatedValue certified_val() const;
  /// Lowest known exponent, or the truncation order when no term is known.
  ExtRational known_val() const;
  AlgNum coeff(const Rational& exponent) const;
  const AlgNum& leading_coeff() const;
  Rational leading_exponent() const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries& operator+=(const PuiseuxSeries& b) { return *this = *this + b; }
  PuiseuxSeries& operator-=(const PuiseuxSeries& b) { return *this = *this - b; }
  PuiseuxSeries& operator*=(const PuiseuxSeries& b) { return *this = *this * b; }
  /// Same known terms and same truncation.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  PuiseuxSeries scaled(const AlgNum& c) const;
  PuiseuxSeries pow(std::uint64_t n) const;
  PuiseuxSeries derivative(std::uint64_t n = 1) const;
  /// Forgets every term with exponent >= order.
  PuiseuxSeries truncated(const Rational& order) const;
  /// Multiplies by x^shift.
  PuiseuxSeries shifted(const Rational& shift) const;
  PuiseuxSeries project(const Tower& target) const;
  /// Agreement on all exponents below both truncations.
  bool agrees_with(const PuiseuxSeries& other) const;

  std::string to_string() const;

 private:
  void normalize();
  PuiseuxSeries with_ramification(std::int64_t e) const;

  std::int64_t e_ = 1;
  Terms terms_;
  std::optional<std::int64_t> trunc_;
};

/// F(a + x, b + S(x)). With `cap`, intermediate results are truncated at that exponent;
/// the output truncation stays sound either way.
PuiseuxSeries eval_on_series(const BiPoly& F, const AlgNum& a, const AlgNum& b, const PuiseuxSeries& S,
                             std::optional<Rational> cap = std::nullopt);

/// det [S_j^{(i)}]_{0 <= i, j < n}. Throws TRUNCATION_EXHAUSTED when a needed derivative
/// has no determinable term.
PuiseuxSeries wronskian(const std::vector<PuiseuxSeries>& series);

}  // namespace imult
