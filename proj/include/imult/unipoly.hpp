#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "imult/dense_poly.hpp"
#include "imult/tower.hpp"

namespace imult {

/// Sparse univariate polynomial; no zero coefficients are stored.
class UniPoly {
 public:
  using Terms = std::map<std::int64_t, AlgNum>;

  UniPoly() = default;
  UniPoly(const AlgNum& c);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(Terms terms);
  static UniPoly monomial(const AlgNum& c, std::int64_t e);
  static UniPoly variable() { return monomial(AlgNum(1), 1); }
  static UniPoly from_dense(const dense::Poly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::optional<std::int64_t> degree() const;
  /// Lowest exponent; requires a nonzero polynomial.
  std::int64_t valuation() const;
  AlgNum coeff(std::int64_t e) const;
  const AlgNum& leading_coeff() const;
  Tower tower() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly scaled(const AlgNum& c) const;
  UniPoly pow(std::uint64_t e) const;
  UniPoly derivative(std::uint64_t n = 1) const;
  /// Multiplies by x^shift (shift may be negative when divisible).
  UniPoly shifted(std::int64_t shift) const;
  AlgNum eval(const AlgNum& z) const;
  UniPoly project(const Tower& target) const;

  dense::Poly to_dense() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void add_term(std::int64_t e, const AlgNum& c);
  Terms terms_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Throws InvalidArgument when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Renders a coefficient for polynomial text; rationals plain, algebraic numbers in brackets.
std::string coeff_text(const AlgNum& c);

}  // namespace imult
