#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "imult/error.hpp"

namespace imult {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
/// Always "num/den"; used by the JSON reports.
std::string to_fraction_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& q);  // requires an integer value
Integer binomial(std::uint64_t n, std::uint64_t k);
Integer factorial(std::uint64_t n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Floor of a/b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// A rational number or +infinity (the valuation of the zero series).
class ExtRational {
 public:
  ExtRational() : finite_(false) {}
  ExtRational(const Rational& q) : finite_(true), value_(q) {}  // NOLINT(google-explicit-constructor)
  ExtRational(std::int64_t v) : finite_(true), value_(v) {}      // NOLINT(google-explicit-constructor)

  static ExtRational infinity() { return ExtRational(); }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);

  std::string to_string() const;

 private:
  bool finite_;
  Rational value_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
std::ostream& operator<<(std::ostream& os, const ExtRational& v);

}  // namespace imult
