#include "imult/multiplicity.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "imult/bipoly_gcd.hpp"
#include "imult/newton.hpp"

namespace imult {

const char* method_name(Method m) {
  switch (m) {
    case Method::HalphenForm1: return "HALPHEN_FORM1";
    case Method::HalphenForm2: return "HALPHEN_FORM2";
    case Method::HalphenForm3: return "HALPHEN_FORM3";
    case Method::JetOracle: return "JET_ORACLE";
  }
  return "?";
}

std::string MultiplicityResult::to_string() const { return infinite ? "INFINITE" : std::to_string(value); }

namespace {

std::int64_t total_degree_of(const BiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "intersection with the zero polynomial");
  return *F.total_degree();
}

Tower input_tower(const BiPoly& F, const BiPoly& G, const Point& p) {
  Tower t = common_tower(F.tower(), G.tower());
  for (const AlgNum* c : {&p.a, &p.b})
    if (!c->is_rational()) {
      if (!is_prefix(t, c->tower()) && !is_prefix(c->tower(), t))
        throw Error(ErrorCode::InvalidArgument, "point coordinates live in an unrelated tower");
      t = common_tower(t, c->tower());
    }
  return t;
}

// A nonzero representative that is also a unit; raises ZeroDivisor otherwise.
bool certified_nonzero(const AlgNum& c) {
  if (c.is_zero()) return false;
  c.inverse();
  return true;
}

template <class Fn>
MultiplicityResult over_components(const Tower& tower, Fn&& fn) {
  auto runs = run_with_splits(tower, 0, fn);
  const MultiplicityResult& first = runs.front().second;
  for (const auto& [comp, res] : runs)
    if (res.infinite != first.infinite || res.value != first.value)
      throw Error(ErrorCode::AmbiguousSplit, "multiplicity differs between components of the coefficient field");
  return first;
}

PuiseuxSeries map_series(const PuiseuxSeries& s, const Graft& g) {
  PuiseuxSeries::Terms t;
  for (const auto& [k, c] : s.terms()) t.emplace(k, graft_map(g, c));
  return PuiseuxSeries(s.ramification(), std::move(t), s.truncation());
}

// Accumulates weight * val over the split components of `tower`; false when some
// series is zero up to its truncation.
template <class Fn>
bool add_valuations(const Tower& tower, std::uint32_t base_depth, std::uint64_t weight, Fn&& series_in,
                    std::vector<Summand>& out) {
  auto runs = run_with_splits(tower, base_depth, [&](const Tower& comp) -> std::optional<Rational> {
    TruncatedValue v = series_in(comp).certified_val();
    if (v.value.is_infinite()) return std::nullopt;
    return v.value.value();
  });
  for (const auto& [comp, v] : runs) {
    if (!v) return false;
    out.push_back({*v, weight * conjugate_count(comp, base_depth)});
  }
  return true;
}

std::vector<Branch> positive_branches(const BiPoly& F, const Tower& base, const Rational& order) {
  if (F.degree_y().value_or(0) < 1) return {};
  ExpansionOptions opt;
  opt.order = order;
  opt.base = base;
  return expand_branches(F, opt);
}

MultiplicityResult halphen_at_origin(const BiPoly& F, const BiPoly& G, const Tower& base, int form, std::int64_t D) {
  MultiplicityResult res;
  res.method = form == 1 ? Method::HalphenForm1 : form == 2 ? Method::HalphenForm2 : Method::HalphenForm3;
  if (certified_nonzero(F.coeff(0, 0)) || certified_nonzero(G.coeff(0, 0))) return res;
  res.m = F.x_divisibility();
  res.n = G.x_divisibility();
  if (res.m > 0 && res.n > 0) {
    res.infinite = true;
    return res;
  }
  BiPoly H = gcd_bivariate(F, G);
  if (!H.is_constant() && !certified_nonzero(H.coeff(0, 0))) {
    res.infinite = true;
    return res;
  }
  res.r = positive_valuation_count(F);
  res.s = positive_valuation_count(G);
  std::uint32_t depth = tower_depth(base);

  Rational order = Rational(static_cast<long>(D + 1));
  for (int attempt = 0; attempt < 3; ++attempt, order *= 2) {
    res.summands.clear();
    bool resolved = true;
    if (form == 1 || form == 2) {
      const BiPoly& A = form == 1 ? F : G;
      const BiPoly& B = form == 1 ? G : F;
      for (const auto& br : positive_branches(A, base, order)) {
        resolved = add_valuations(br.tower, depth, br.multiplicity, [&](const Tower& comp) {
          return eval_on_series(B.project(comp), AlgNum(0), AlgNum(0), br.series.project(comp), order);
        }, res.summands);
        if (!resolved) break;
      }
    } else {
      auto fs = positive_branches(F, base, order);
      auto gs = positive_branches(G, base, order);
      for (const auto& bf : fs) {
        for (const auto& bg : gs) {
          Graft g = graft(bf.tower, bg.tower, depth);
          PuiseuxSeries T = map_series(bg.series, g);
          std::uint64_t w = static_cast<std::uint64_t>(bf.multiplicity) * static_cast<std::uint64_t>(bg.multiplicity);
          resolved = add_valuations(g.joint, depth, w, [&](const Tower& comp) {
            return bf.series.project(comp) - T.project(comp);
          }, res.summands);
          if (!resolved) break;
        }
        if (!resolved) break;
      }
    }
    if (!resolved) continue;
    Rational total = 0;
    if (form != 2) total += Rational(static_cast<long>(res.m * res.s));
    if (form != 1) total += Rational(static_cast<long>(res.n * res.r));
    for (const auto& sm : res.summands) total += sm.val * Rational(static_cast<unsigned long>(sm.weight));
    if (!is_integer(total) || sgn(total) < 0)
      throw Error(ErrorCode::HypothesisViolated, "Halphen sum is not a natural number: " + imult::to_string(total));
    res.value = static_cast<std::uint64_t>(to_int64(total));
    return res;
  }
  throw Error(ErrorCode::TruncationExhausted, "branch valuations not determined at order " + imult::to_string(order));
}

// dim of polynomials of degree < N modulo the truncated multiples of F and G.
std::int64_t jet_codimension(const BiPoly& F, const BiPoly& G, std::int64_t N) {
  auto col = [](std::int64_t i, std::int64_t j) {
    std::int64_t d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  };
  std::size_t cols = static_cast<std::size_t>(N * (N + 1) / 2);
  std::map<std::size_t, std::map<std::size_t, AlgNum>> pivots;
  for (const BiPoly* P : {&F, &G}) {
    for (std::int64_t a = 0; a + 2 <= N; ++a) {
      for (std::int64_t b = 0; a + b + 2 <= N; ++b) {
        std::map<std::size_t, AlgNum> row;
        for (const auto& [e, c] : P->terms())
          if (e.x + a + e.y + b < N) row[col(e.x + a, e.y + b)] = c;
        while (!row.empty()) {
          auto it = row.begin();
          auto pv = pivots.find(it->first);
          if (pv == pivots.end()) break;
          AlgNum f = it->second;
          for (const auto& [k, v] : pv->second) {
            AlgNum nv = row[k] - f * v;
            if (nv.is_zero()) row.erase(k);
            else row[k] = nv;
          }
        }
        if (row.empty()) continue;
        AlgNum inv = row.begin()->second.inverse();
        for (auto& [k, v] : row) v *= inv;
        std::size_t lead = row.begin()->first;
        pivots.emplace(lead, std::move(row));
      }
    }
  }
  return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(pivots.size());
}

}  // namespace

MultiplicityResult halphen_multiplicity(const BiPoly& F, const BiPoly& G, const Point& p, int form) {
  if (form < 1 || form > 3) throw Error(ErrorCode::InvalidArgument, "Halphen form must be 1, 2 or 3");
  std::int64_t D = checked_mul(total_degree_of(F), total_degree_of(G));
  Tower base = input_tower(F, G, p);
  BiPoly Fs = F.translate(p.a, p.b), Gs = G.translate(p.a, p.b);
  return over_components(base, [&](const Tower& comp) {
    return halphen_at_origin(Fs.project(comp), Gs.project(comp), comp, form, D);
  });
}

MultiplicityResult jet_oracle_multiplicity(const BiPoly& F, const BiPoly& G, const Point& p) {
  std::int64_t D = checked_mul(total_degree_of(F), total_degree_of(G));
  Tower base = input_tower(F, G, p);
  BiPoly Fs = F.translate(p.a, p.b), Gs = G.translate(p.a, p.b);
  return over_components(base, [&](const Tower& comp) {
    MultiplicityResult res;
    res.method = Method::JetOracle;
    BiPoly A = Fs.project(comp), B = Gs.project(comp);
    if (certified_nonzero(A.coeff(0, 0)) || certified_nonzero(B.coeff(0, 0))) return res;
    res.m = A.x_divisibility();
    res.n = B.x_divisibility();
    std::int64_t prev = jet_codimension(A, B, 1);
    for (std::int64_t N = 2; N <= D + 2; ++N) {
      std::int64_t cur = jet_codimension(A, B, N);
      if (cur == prev) {
        res.value = static_cast<std::uint64_t>(cur);
        return res;
      }
      prev = cur;
    }
    res.infinite = true;
    return res;
  });
}

bool is_infinite(const BiPoly& F, const BiPoly& G, const Point& p) {
  if (F.is_zero() || G.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "intersection with the zero polynomial");
  BiPoly H = gcd_bivariate(F, G);
  return !H.is_constant() && H.eval(p.a, p.b).is_zero();
}

BezoutCheck bezout_sum_check(const BiPoly& F, const BiPoly& G, const std::vector<Point>& points) {
  BezoutCheck out;
  out.bound = static_cast<std::uint64_t>(checked_mul(total_degree_of(F), total_degree_of(G)));
  for (const auto& p : points) {
    MultiplicityResult r = halphen_multiplicity(F, G, p);
    if (r.infinite) throw Error(ErrorCode::InfiniteMultiplicity, "point is not an isolated solution");
    out.sum += r.value;
  }
  out.ok = out.sum <= out.bound;
  return out;
}

}  // namespace imult
