#pragma once

#include <utility>
#include <vector>

#include "imult/bipoly.hpp"

namespace imult {

/// Monic gcd of the y-coefficients of F (a polynomial in x).
UniPoly content_y(const BiPoly& F);
BiPoly primitive_part_y(const BiPoly& F);

/// Exact quotient A / B; throws InvalidArgument when B does not divide A.
BiPoly exact_div(const BiPoly& A, const BiPoly& B);
bool divides(const BiPoly& B, const BiPoly& A);

/// A gcd, primitive in y times the gcd of the contents, with its leading coefficient
/// (highest y power, then highest x power) equal to 1.
BiPoly gcd_bivariate(const BiPoly& F, const BiPoly& G);

/// Res_y(F, G) by the subresultant algorithm.
UniPoly resultant_y(const BiPoly& F, const BiPoly& G);

/// Squarefree decomposition in y of the primitive part: pairs (P_i, i) with
/// pp(F) = c * prod P_i^i.
std::vector<std::pair<BiPoly, int>> squarefree_decomposition_y(const BiPoly& F);

}  // namespace imult
