#pragma once

// Dense univariate polynomials over tower elements, coefficients low to high.
// Used for moduli, edge polynomials and polynomial remainder sequences.

#include <cstdint>
#include <utility>
#include <vector>

#include "imult/tower.hpp"

namespace imult::dense {

using Poly = std::vector<AlgNum>;

void trim(Poly& p);
/// -1 for the zero polynomial.
std::int64_t degree(const Poly& p);
bool is_zero(const Poly& p);
Tower tower_of(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const AlgNum& c);
Poly derivative(const Poly& p);
AlgNum eval(const Poly& p, const AlgNum& z);
/// p(z + c)
Poly taylor_shift(const Poly& p, const AlgNum& c);

/// Euclidean division; inverts the leading coefficient of b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Throws InvalidArgument when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
/// Monic gcd; zero when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// g = gcd(a, m) monic and s with s*a = g (mod m), deg s < deg m.
struct ExtGcd {
  Poly g;
  Poly s;
};
ExtGcd ext_gcd_mod(const Poly& a, const Poly& m);

Poly squarefree_part(const Poly& p);
/// Monic factors P_i of positive degree with p = lc * prod P_i^i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

bool all_rational(const Poly& p);
/// Rational roots of a polynomial with rational coefficients; empty when the rational
/// root test would need too many candidates.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace imult::dense
