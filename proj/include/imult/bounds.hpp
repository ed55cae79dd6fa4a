#pragma once

#include <cstdint>

#include "imult/rational.hpp"

namespace imult {

/// 5/2 d^2 t^2.
Rational multiplicity_bound(std::int64_t d, std::int64_t t);

/// d(t-1) + d(4d+1)t(t-1)/2, the sharper bound the multiplicity bound is assembled from.
Rational assembly_bound(std::int64_t d, std::int64_t t);

/// 2^{t(t-1)/2} (min(n, t) + 1)^t.
Integer gabrielov_bound(std::int64_t n, std::int64_t t);

}  // namespace imult
