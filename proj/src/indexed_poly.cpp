#include "imult/indexed_poly.hpp"

namespace imult {

std::string to_string(const IndexedIntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer a = abs(c);
    if (first) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += "x[" + std::to_string(v.p) + "," + std::to_string(v.q) + "]";
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

PuiseuxSeries evaluate(const IndexedIntPoly& p, const std::function<PuiseuxSeries(VarIndex)>& value) {
  std::map<VarIndex, PuiseuxSeries> cache;
  PuiseuxSeries sum;
  for (const auto& [m, c] : p.terms()) {
    PuiseuxSeries term = PuiseuxSeries::constant(AlgNum(c));
    for (const auto& [v, e] : m) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      term *= it->second.pow(e);
    }
    sum += term;
  }
  return sum;
}

std::string ScaledIntPoly::to_string() const {
  std::string num = imult::to_string(numerator);
  if (denominator == 1) return num;
  return "(" + num + ")/" + denominator.get_str();
}

ScaledIntPoly clear_denominators(const IndexedRatPoly& p) {
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IndexedIntPoly::Terms t;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c * Rational(den);
    t.emplace(m, v.get_num());
  }
  return {IndexedIntPoly(std::move(t)), den};
}

IndexedIntPoly to_integer_poly(const IndexedRatPoly& p) {
  ScaledIntPoly s = clear_denominators(p);
  if (s.denominator != 1) throw Error(ErrorCode::HypothesisViolated, "polynomial has non-integer coefficients");
  return s.numerator;
}

}  // namespace imult
