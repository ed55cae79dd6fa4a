#include "imult/campaign.hpp"

#include <algorithm>
#include <chrono>

#include "imult/bounds.hpp"
#include "imult/identities.hpp"

namespace imult {

bool InstanceReport::ok() const {
  if (!agree) return false;
  for (const auto& v : verdicts)
    if (!v.ok) return false;
  return true;
}

namespace {

Verdict make_verdict(std::string formula, const Rational& lhs, const Rational& rhs) {
  return {std::move(formula), lhs, rhs, lhs <= rhs};
}

std::string point_text(const Point& p) { return coeff_text(p.a) + "," + coeff_text(p.b); }

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t nonzero(std::mt19937_64& rng, std::int64_t range) {
  std::int64_t v = uniform(rng, 1, range);
  return uniform(rng, 0, 1) ? v : -v;
}

}  // namespace

InstanceReport verify_bound_instance(const PolySpec& F, const PolySpec& G, const Point& p) {
  if (p.a.is_zero() || p.b.is_zero())
    throw Error(ErrorCode::InvalidArgument,
                "the bound needs a point with nonzero coordinates; at (0,0) the pair x - y, x^(2n) - y^n "
                "already has multiplicity n with fixed degree and monomial count");
  if (F.poly.is_zero() || G.poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "instance with a zero polynomial");
  if (is_infinite(F.poly, G.poly, p))
    throw Error(ErrorCode::InfiniteMultiplicity, "the point is not an isolated solution");
  auto start = std::chrono::steady_clock::now();
  InstanceReport r;
  r.F = F.source.empty() ? F.poly.to_string() : F.source;
  r.G = G.source.empty() ? G.poly.to_string() : G.source;
  r.point = p;
  r.d = F.degree();
  r.t = static_cast<std::int64_t>(G.terms());
  r.halphen = halphen_multiplicity(F.poly, G.poly, p, 1);
  r.oracle = jet_oracle_multiplicity(F.poly, G.poly, p);
  r.agree = r.halphen.infinite == r.oracle.infinite && r.halphen.value == r.oracle.value;
  if (r.d >= 1) {
    Rational I = static_cast<unsigned long>(r.halphen.value);
    r.verdicts.push_back(make_verdict("I_p <= 5/2 d^2 t^2", I, multiplicity_bound(r.d, r.t)));
    r.verdicts.push_back(make_verdict("I_p <= d(t-1) + d(4d+1)t(t-1)/2", I, assembly_bound(r.d, r.t)));
  } else {
    r.verdicts.push_back({"deg F >= 1", Rational(r.d), Rational(1), false});
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

PlantedInstance planted_instance(std::mt19937_64& rng, const ExperimentConfig& cfg) {
  if (cfg.max_terms < 2 || cfg.max_degree < 1 || cfg.exponent_cap < 1 || cfg.coeff_range < 1)
    throw Error(ErrorCode::InvalidArgument, "planted instances need max_terms >= 2 and positive caps");
  for (;;) {
    PlantedInstance inst;
    inst.point.a = AlgNum(make_rational(nonzero(rng, 3), uniform(rng, 1, 3)));
    inst.point.b = AlgNum(make_rational(nonzero(rng, 3), uniform(rng, 1, 3)));

    BiPoly F;
    std::int64_t fterms = uniform(rng, 1, cfg.max_degree + 2);
    for (std::int64_t i = 0; i < fterms; ++i) {
      std::int64_t deg = uniform(rng, 1, cfg.max_degree);
      std::int64_t ex = uniform(rng, 0, deg);
      F += BiPoly::monomial(AlgNum(nonzero(rng, cfg.coeff_range)), ex, deg - ex);
    }
    F -= BiPoly(F.eval(inst.point.a, inst.point.b));
    if (F.is_constant()) continue;

    BiPoly G;
    std::int64_t gterms = uniform(rng, 1, cfg.max_terms - 1);
    for (std::int64_t i = 0; i < gterms; ++i) {
      std::int64_t ex = uniform(rng, 0, cfg.exponent_cap), ey = uniform(rng, 0, cfg.exponent_cap);
      if (ex + ey == 0) ex = 1;
      G += BiPoly::monomial(AlgNum(nonzero(rng, cfg.coeff_range)), ex, ey);
    }
    G -= BiPoly(G.eval(inst.point.a, inst.point.b));
    if (G.is_constant()) continue;
    if (is_infinite(F, G, inst.point)) continue;
    inst.F = std::move(F);
    inst.G = std::move(G);
    return inst;
  }
}

CampaignReport bound_campaign(const ExperimentConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<PlantedInstance> items;
  for (std::int64_t i = 0; i < cfg.count; ++i) items.push_back(planted_instance(rng, cfg));
  CampaignReport rep;
  rep.config = cfg;
  rep.instances = parallel_map(items, [](const PlantedInstance& inst) {
    PolySpec F{inst.F.to_string(), inst.F, false}, G{inst.G.to_string(), inst.G, false};
    return verify_bound_instance(F, G, inst.point);
  }, cfg.threads);
  for (const auto& r : rep.instances)
    if (r.ok()) ++rep.passed;
  return rep;
}

std::vector<DegenerateRow> degenerate_family(std::int64_t n_max) {
  std::vector<DegenerateRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BiPoly F1 = BiPoly::x() - BiPoly::y();
    BiPoly G1 = BiPoly::monomial(AlgNum(1), 2 * n, 0) - BiPoly::monomial(AlgNum(1), 0, n);
    BiPoly F2 = BiPoly::x() - BiPoly(AlgNum(1));
    BiPoly G2 = BiPoly::monomial(AlgNum(1), 0, n) + F2;
    std::vector<std::tuple<BiPoly, BiPoly, Point>> cases{{F1, G1, Point{AlgNum(0), AlgNum(0)}},
                                                        {F2, G2, Point{AlgNum(1), AlgNum(0)}}};
    for (const auto& [F, G, p] : cases) {
      DegenerateRow row;
      row.n = n;
      row.F = F.to_string();
      row.G = G.to_string();
      row.point = point_text(p);
      row.multiplicity = halphen_multiplicity(F, G, p).value;
      row.bound = multiplicity_bound(*F.total_degree(), static_cast<std::int64_t>(G.term_count()));
      row.exceeds = Rational(static_cast<unsigned long>(row.multiplicity)) > row.bound;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

FgRecord fgplus1_instance(const UniPoly& f, const UniPoly& g) {
  FgRecord r;
  r.f = f.to_string();
  r.g = g.to_string();
  UniPoly h = f * g + UniPoly(AlgNum(1));
  r.h = h.to_string();
  r.multiplicity = h.is_zero() ? 0 : hajos_max_multiplicity(h);
  return r;
}

FgReport fgplus1_search(const ExperimentConfig& cfg) {
  if (cfg.max_terms < 1 || cfg.exponent_cap < 1 || cfg.coeff_range < 1)
    throw Error(ErrorCode::InvalidArgument, "search needs positive caps");
  std::mt19937_64 rng(cfg.seed);
  auto random_sparse = [&] {
    UniPoly p;
    std::int64_t terms = uniform(rng, 1, cfg.max_terms);
    for (std::int64_t i = 0; i < terms; ++i)
      p += UniPoly::monomial(AlgNum(nonzero(rng, cfg.coeff_range)), uniform(rng, 0, cfg.exponent_cap));
    return p;
  };
  std::vector<std::pair<UniPoly, UniPoly>> pairs;
  for (std::int64_t i = 0; i < cfg.count; ++i) {
    UniPoly f = random_sparse();
    UniPoly g = random_sparse();
    pairs.emplace_back(std::move(f), std::move(g));
  }
  auto records = parallel_map(pairs, [](const std::pair<UniPoly, UniPoly>& fg) {
    return fgplus1_instance(fg.first, fg.second);
  }, cfg.threads);
  FgReport rep;
  rep.config = cfg;
  rep.cap = static_cast<std::uint64_t>(cfg.max_terms * cfg.max_terms);
  rep.samples = cfg.count;
  for (const auto& r : records) rep.observed_max = std::max(rep.observed_max, r.multiplicity);
  for (const auto& r : records)
    if (r.multiplicity == rep.observed_max && rep.extremal.size() < 8) rep.extremal.push_back(r);
  return rep;
}

}  // namespace imult
