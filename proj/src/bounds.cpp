#include "imult/bounds.hpp"

#include <algorithm>

#include "imult/error.hpp"

namespace imult {

namespace {

void require_positive(std::int64_t a, std::int64_t b, const char* what) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs positive arguments");
}

}  // namespace

Rational multiplicity_bound(std::int64_t d, std::int64_t t) {
  require_positive(d, t, "multiplicity bound");
  Rational D = static_cast<long>(d), T = static_cast<long>(t);
  return make_rational(5, 2) * D * D * T * T;
}

Rational assembly_bound(std::int64_t d, std::int64_t t) {
  require_positive(d, t, "assembly bound");
  Rational D = static_cast<long>(d), T = static_cast<long>(t);
  return D * (T - 1) + D * (4 * D + 1) * T * (T - 1) / 2;
}

Integer gabrielov_bound(std::int64_t n, std::int64_t t) {
  require_positive(n, t, "Gabrielov bound");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(t * (t - 1) / 2));
  Integer b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(std::min(n, t) + 1), static_cast<unsigned long>(t));
  return r * b;
}

}  // namespace imult
