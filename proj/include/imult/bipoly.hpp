#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "imult/unipoly.hpp"

namespace imult {

/// Exponent pair of x^x * y^y, ordered by y first.
struct Exponent {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

struct AffineMap;

/// Sparse bivariate polynomial in x and y; no zero coefficients are stored.
class BiPoly {
 public:
  using Terms = std::map<Exponent, AlgNum>;

  BiPoly() = default;
  BiPoly(const AlgNum& c);  // NOLINT(google-explicit-constructor)
  explicit BiPoly(Terms terms);
  static BiPoly monomial(const AlgNum& c, std::int64_t ex, std::int64_t ey);
  static BiPoly x() { return monomial(AlgNum(1), 1, 0); }
  static BiPoly y() { return monomial(AlgNum(1), 0, 1); }
  static BiPoly in_x(const UniPoly& p);
  static BiPoly in_y(const UniPoly& p);
  /// sum_k coeffs[k](x) y^k
  static BiPoly from_y_coefficients(const std::map<std::int64_t, UniPoly>& coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{}); }
  /// Number of monomials t.
  std::size_t term_count() const { return terms_.size(); }
  /// Total degree d; nullopt for the zero polynomial.
  std::optional<std::int64_t> total_degree() const;
  std::optional<std::int64_t> degree_x() const;
  std::optional<std::int64_t> degree_y() const;
  AlgNum coeff(std::int64_t ex, std::int64_t ey) const;
  Tower tower() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  BiPoly scaled(const AlgNum& c) const;
  BiPoly pow(std::uint64_t e) const;
  /// d^{p+q} / dx^p dy^q
  BiPoly partial_derivative(std::uint64_t p, std::uint64_t q) const;
  AlgNum eval(const AlgNum& a, const AlgNum& b) const;
  /// F(a + x, b + y)
  BiPoly translate(const AlgNum& a, const AlgNum& b) const;
  BiPoly compose_affine(const AffineMap& L) const;
  BiPoly swap_xy() const;
  /// F(x, y) with y replaced by a univariate polynomial in x.
  UniPoly substitute_y(const UniPoly& s) const;
  BiPoly project(const Tower& target) const;

  /// F_k(x) with F = sum_k F_k(x) y^k.
  std::map<std::int64_t, UniPoly> y_coefficients() const;
  /// Largest m with x^m dividing F.
  std::int64_t x_divisibility() const;
  std::int64_t y_divisibility() const;
  /// Divides by x^ex y^ey; the monomial must divide F.
  BiPoly divided_by_monomial(std::int64_t ex, std::int64_t ey) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const AlgNum& c);
  Terms terms_;
};

/// (x, y) -> (m11 x + m12 y + t1, m21 x + m22 y + t2)
struct AffineMap {
  AlgNum m11 = AlgNum(1), m12, m21, m22 = AlgNum(1), t1, t2;

  static AffineMap translation(const AlgNum& a, const AlgNum& b);
  static AffineMap swap();
  AlgNum determinant() const { return m11 * m22 - m12 * m21; }
  AffineMap inverse() const;
  std::pair<AlgNum, AlgNum> apply(const AlgNum& x, const AlgNum& y) const;
};

}  // namespace imult
