#pragma once

// Newton polygons in the (y-degree, x-valuation) plane and Newton-Puiseux expansion of
// the roots y = S(x) of F(x, y) = 0.

#include <cstdint>
#include <vector>

#include "imult/bipoly.hpp"
#include "imult/puiseux.hpp"

namespace imult {

struct PolygonPoint {
  std::int64_t k = 0;
  std::int64_t v = 0;
  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonEdge {
  PolygonPoint from;
  PolygonPoint to;
  /// (to.v - from.v) / (to.k - from.k); branches on this edge have valuation -slope.
  Rational slope;
  std::int64_t length = 0;
};

struct NewtonPolygon {
  /// (k, val F_k) for every nonzero F_k, by increasing k.
  std::vector<PolygonPoint> points;
  /// Vertices of the lower convex hull.
  std::vector<PolygonPoint> vertices;
  /// Lower edges by increasing slope.
  std::vector<PolygonEdge> edges;
  /// min_k val F_k, the power of x dividing F.
  std::int64_t m = 0;
  /// min{k : F_k != 0}, the multiplicity of the zero root.
  std::int64_t zero_series_count = 0;
};

/// Valuations are certified: the lowest coefficient of each F_k is checked to be a unit,
/// which may raise ZeroDivisor for coefficients in a reducible tower.
NewtonPolygon newton_polygon(const BiPoly& F);

/// Number r of roots with strictly positive valuation, counted with multiplicity and
/// including the zero root: r = min{k : val F_k = m}.
std::int64_t positive_valuation_count(const BiPoly& F);

/// Largest m with x^m | F.
std::int64_t x_divisibility(const BiPoly& F);

struct Branch {
  PuiseuxSeries series;
  /// Multiplicity as a root of F.
  int multiplicity = 1;
  /// Number of conjugate roots this symbolic branch stands for.
  std::uint64_t conjugates = 1;
  /// Tower holding the branch coefficients; levels above the input tower are the
  /// extensions adjoined (and possibly split) during expansion.
  Tower tower;
};

struct ExpansionOptions {
  /// Every branch is known below this exponent (or exact).
  Rational order = 1;
  /// Also return branches of valuation <= 0.
  bool all_finite = false;
  /// Bound on nested Newton steps for one branch.
  int max_depth = 256;
  /// Tower the coefficients are read in; must extend or be extended by F's own tower.
  Tower base;
};

/// Branches with positive valuation (all finite ones on request), the zero root included.
/// F is made squarefree in y first; multiplicities come from the squarefree decomposition.
/// A zero divisor in the tower of F's own coefficients propagates to the caller.
std::vector<Branch> expand_branches(const BiPoly& F, const ExpansionOptions& options);
std::vector<Branch> expand_branches(const BiPoly& F, const Rational& order);

}  // namespace imult
