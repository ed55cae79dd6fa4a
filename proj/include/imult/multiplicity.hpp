#pragma once

// Local intersection multiplicity of two plane curves at a point.

#include <cstdint>
#include <string>
#include <vector>

#include "imult/bipoly.hpp"

namespace imult {

struct Point {
  AlgNum a;
  AlgNum b;
};

enum class Method { HalphenForm1, HalphenForm2, HalphenForm3, JetOracle };

const char* method_name(Method m);

/// One summand of a Halphen sum: a valuation counted `weight` times.
struct Summand {
  Rational val;
  std::uint64_t weight = 1;
};

struct MultiplicityResult {
  bool infinite = false;
  std::uint64_t value = 0;
  Method method = Method::HalphenForm1;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::vector<Summand> summands;

  bool operator==(std::uint64_t v) const { return !infinite && value == v; }
  std::string to_string() const;
};

/// I_p(F, G) from Puiseux branches of the curves moved to the origin. `form` selects
/// which of the three equivalent sums is evaluated:
///   1: m s + sum_i val G(x, S_i)
///   2: n r + sum_j val F(x, T_j)
///   3: m s + n r + sum_{i,j} val(S_i - T_j)
/// where S_i, T_j are the positive-valuation branches of F and G, x^m || F, x^n || G and
/// r, s count those branches.
MultiplicityResult halphen_multiplicity(const BiPoly& F, const BiPoly& G, const Point& p, int form = 1);

/// Codimension of <F, G> + m^N in the truncated local ring, for growing N.
MultiplicityResult jet_oracle_multiplicity(const BiPoly& F, const BiPoly& G, const Point& p);

/// gcd(F, G) is nonconstant and vanishes at p.
bool is_infinite(const BiPoly& F, const BiPoly& G, const Point& p);

struct BezoutCheck {
  std::uint64_t sum = 0;
  std::uint64_t bound = 0;
  bool ok = false;
};

/// Sum of I_p(F, G) over the given (distinct) points against deg F * deg G.
/// Throws INFINITE_MULTIPLICITY when some point is not isolated.
BezoutCheck bezout_sum_check(const BiPoly& F, const BiPoly& G, const std::vector<Point>& points);

}  // namespace imult
