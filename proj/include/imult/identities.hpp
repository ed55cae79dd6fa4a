#pragma once

// Root multiplicities of sparse polynomials, derivatives of powers and of implicit roots.

#include <cstdint>
#include <vector>

#include "imult/indexed_poly.hpp"
#include "imult/multiplicity.hpp"
#include "imult/newton.hpp"

namespace imult {

/// Largest multiplicity of a nonzero root of f (0 when f has none).
std::uint64_t hajos_max_multiplicity(const UniPoly& f);

/// Number of positive-valuation roots of G(a + x, b + y), with multiplicity. Needs a, b != 0.
std::int64_t shift_positive_count(const BiPoly& G, const Point& p);

/// s = (s_1, s_2, ...) with sum i s_i = k; trailing zeros dropped.
using SeqPartition = std::vector<std::uint64_t>;

std::uint64_t weight(const SeqPartition& s);  // sum i s_i
std::uint64_t size(const SeqPartition& s);    // sum s_i
std::vector<SeqPartition> seq_partitions(std::uint64_t k);

/// Coefficient of S^{n-|s|} prod (S^{(l)})^{s_l} in d^k(S^n), by repeated product rule.
Integer xi_constant(std::uint64_t n, const SeqPartition& s);

struct PowerDerivativeTerm {
  SeqPartition s;
  Integer xi;
  PuiseuxSeries value;
};

struct PowerDerivative {
  PuiseuxSeries direct;
  PuiseuxSeries structured;
  std::vector<PowerDerivativeTerm> terms;
};

/// d^k(S^n) computed directly and as sum_s xi_{n,s} S^{n-|s|} prod (S^{(l)})^{s_l}.
PowerDerivative derivative_of_power(const PuiseuxSeries& S, std::uint64_t n, std::uint64_t k);

/// R_k with S^{(k)} (F_y)^{2k-1} = R_k((d^{p,q}F)(x, S)) for every root S of F.
const IndexedIntPoly& build_R(std::uint64_t k);

/// Rbar_{k,l}: the analogous expression of (d^{k,l}G)(x, S) (F_y)^{2k+l-1}, G = F / (y - S).
const ScaledIntPoly& build_Rbar(std::uint64_t k, std::uint64_t l);

/// Checks S^{(k)} F_y(x, S)^{2k-1} = R_k(partials along S) up to the known precision.
bool verify_root_derivative_identity(const BiPoly& F, const Branch& branch, std::uint64_t k);

struct SumValCheck {
  Rational sum;
  Rational bound;
  bool ok = false;
};

/// sum_i val G(a + x, b + S_i) over the positive-valuation roots S_i of F(a + x, b + y),
/// against d(4d+1)t(t-1)/2 with d = deg F and t the number of monomials of G.
/// F is assumed irreducible by the caller.
SumValCheck sum_val_bound_check(const BiPoly& F, const BiPoly& G, const Point& p);

}  // namespace imult
