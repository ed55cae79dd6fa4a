#include "imult/newton.hpp"

#include "imult/bipoly_gcd.hpp"
#include "imult/dense_poly.hpp"

namespace imult {

namespace {

// cross product sign of (b - a) x (c - a)
Integer cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  Integer dx1 = static_cast<long>(b.k - a.k), dv1 = static_cast<long>(b.v - a.v);
  Integer dx2 = static_cast<long>(c.k - a.k), dv2 = static_cast<long>(c.v - a.v);
  return dx1 * dv2 - dv1 * dx2;
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "newton polygon of the zero polynomial");
  NewtonPolygon np;
  for (const auto& [k, fk] : F.y_coefficients()) {
    fk.terms().begin()->second.inverse();
    np.points.push_back({k, fk.valuation()});
  }
  np.zero_series_count = np.points.front().k;
  np.m = np.points.front().v;
  for (const auto& p : np.points) np.m = std::min(np.m, p.v);
  for (const auto& p : np.points) {
    while (np.vertices.size() >= 2 && cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), p) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i];
    const auto& b = np.vertices[i + 1];
    np.edges.push_back({a, b, make_rational(b.v - a.v, b.k - a.k), b.k - a.k});
  }
  return np;
}

std::int64_t positive_valuation_count(const BiPoly& F) {
  NewtonPolygon np = newton_polygon(F);
  for (const auto& p : np.points)
    if (p.v == np.m) return p.k;
  return 0;
}

std::int64_t x_divisibility(const BiPoly& F) { return F.x_divisibility(); }

namespace {

// Current state of one Newton-Puiseux path: a root Y of the input satisfies
// Y = prefix + t^sigma * y with t = x^(1/E) and y a root of H(t, y).
struct Frame {
  BiPoly H;
  std::int64_t E = 1;
  std::int64_t sigma = 0;
  PuiseuxSeries prefix;
  Tower tower;
};

struct Context {
  const ExpansionOptions& options;
  int multiplicity;
  std::uint32_t input_depth;
};

using Dense = std::vector<AlgNum>;

// H(u^q, u^p (c + y)) / u^(q beta)
BiPoly substitute_edge(const BiPoly& H, std::int64_t p, std::int64_t q, std::int64_t qbeta, const AlgNum& c) {
  std::int64_t dy = H.degree_y().value_or(0);
  std::vector<AlgNum> cpow{AlgNum(1)};
  for (std::int64_t i = 1; i <= dy; ++i) cpow.push_back(cpow.back() * c);
  BiPoly::Terms acc;
  for (const auto& [e, a] : H.terms()) {
    std::int64_t base = checked_sub(checked_add(checked_mul(q, e.x), checked_mul(p, e.y)), qbeta);
    if (base < 0) throw Error(ErrorCode::InvalidArgument, "edge substitution below the polygon");
    for (std::int64_t j = 0; j <= e.y; ++j) {
      AlgNum v = a * AlgNum(binomial(e.y, j)) * cpow[e.y - j];
      if (v.is_zero()) continue;
      auto [it, inserted] = acc.emplace(Exponent{base, j}, v);
      if (!inserted) it->second += v;
    }
  }
  return BiPoly(std::move(acc));
}

Dense mul_trunc(const Dense& a, const Dense& b, std::size_t n) {
  Dense r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Power-series root of H(u, y) = 0 with y(0) = 0, modulo u^n, when dH/dy(0, 0) is a unit.
Dense newton_lift(const BiPoly& H, std::size_t n) {
  std::map<std::int64_t, Dense> coeffs;
  for (const auto& [e, a] : H.terms()) {
    if (static_cast<std::size_t>(e.x) >= n) continue;
    Dense& d = coeffs[e.y];
    if (d.size() < n) d.resize(n);
    d[e.x] += a;
  }
  std::int64_t dy = H.degree_y().value_or(0);
  Dense y(n);
  std::size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    Dense val(prec), der(prec);
    for (std::int64_t k = dy; k >= 0; --k) {
      der = mul_trunc(der, y, prec);
      for (std::size_t i = 0; i < prec; ++i) der[i] += val[i];
      val = mul_trunc(val, y, prec);
      auto it = coeffs.find(k);
      if (it != coeffs.end())
        for (std::size_t i = 0; i < prec; ++i) val[i] += it->second[i];
    }
    AlgNum inv = der[0].inverse();
    Dense delta(prec);
    for (std::size_t i = 0; i < prec; ++i) {
      AlgNum s = val[i];
      for (std::size_t j = 1; j <= i; ++j) s -= der[j] * delta[i - j];
      delta[i] = s * inv;
    }
    for (std::size_t i = 0; i < prec; ++i) y[i] -= delta[i];
  }
  return y;
}

PuiseuxSeries prefix_with(const Frame& f, std::int64_t sigma, std::int64_t E, const AlgNum& c) {
  return f.prefix + PuiseuxSeries(E, {{sigma, c}}, std::nullopt);
}

void emit(const Context& ctx, const Frame& f, PuiseuxSeries series, std::vector<Branch>& out) {
  Branch b;
  b.series = std::move(series);
  b.multiplicity = ctx.multiplicity;
  b.conjugates = conjugate_count(f.tower, ctx.input_depth);
  b.tower = f.tower;
  out.push_back(std::move(b));
}

void finish_simple(const Context& ctx, const Frame& f, std::vector<Branch>& out) {
  Rational need = ctx.options.order * Rational(static_cast<long>(f.E)) - Rational(static_cast<long>(f.sigma));
  Integer ceil_need;
  mpz_cdiv_q(ceil_need.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
  std::int64_t n = std::max<std::int64_t>(1, to_int64(ceil_need));
  if (n > (std::int64_t{1} << 20)) throw Error(ErrorCode::TruncationExhausted, "expansion order too large");
  Dense y = newton_lift(f.H, static_cast<std::size_t>(n));
  std::int64_t top = -1;
  for (std::int64_t i = 0; i < n; ++i)
    if (!y[i].is_zero()) top = i;
  bool exact = false;
  if (2 * top < n) {
    UniPoly yp = UniPoly::from_dense(Dense(y.begin(), y.begin() + (top + 1)));
    exact = f.H.substitute_y(yp).is_zero();
  }
  PuiseuxSeries::Terms terms;
  for (std::int64_t i = 0; i < n; ++i)
    if (!y[i].is_zero()) terms.emplace(checked_add(f.sigma, i), y[i]);
  std::optional<std::int64_t> trunc;
  if (!exact) trunc = checked_add(f.sigma, n);
  emit(ctx, f, f.prefix + PuiseuxSeries(f.E, std::move(terms), trunc), out);
}

void expand_frame(const Context& ctx, Frame f, bool first, int depth, std::vector<Branch>& out) {
  if (depth > ctx.options.max_depth) throw Error(ErrorCode::TruncationExhausted, "branch separation depth exceeded");
  if (f.H.y_divisibility() > 0) {
    emit(ctx, f, f.prefix, out);
    f.H = f.H.divided_by_monomial(0, 1);
  }
  if (f.H.degree_y().value_or(0) == 0) return;
  NewtonPolygon np = newton_polygon(f.H);
  auto ycoeffs = f.H.y_coefficients();
  for (const auto& edge : np.edges) {
    Rational lambda = -edge.slope;
    if (sgn(lambda) <= 0 && !(first && ctx.options.all_finite)) continue;
    std::int64_t p = to_int64(Integer(lambda.get_num()));
    std::int64_t q = to_int64(Integer(lambda.get_den()));
    std::int64_t qbeta = checked_add(checked_mul(q, edge.from.v), checked_mul(p, edge.from.k));
    dense::Poly phi(static_cast<std::size_t>(edge.length + 1));
    for (std::int64_t k = edge.from.k; k <= edge.to.k; ++k) {
      std::int64_t num = qbeta - p * k;
      if (num % q != 0) continue;
      auto it = ycoeffs.find(k);
      if (it == ycoeffs.end()) continue;
      phi[k - edge.from.k] = it->second.coeff(num / q);
    }
    std::int64_t E2 = checked_mul(f.E, q);
    std::int64_t sigma2 = checked_add(checked_mul(q, f.sigma), p);
    std::uint32_t base_depth = tower_depth(f.tower);
    for (const auto& [factor, mu] : dense::squarefree_decomposition(phi)) {
      for (const auto& cls : root_classes(f.tower, factor)) {
        Tower start = common_tower(f.tower, cls.root.tower());
        auto runs = run_with_splits(start, base_depth, [&](const Tower& comp) {
          AlgNum c = project(cls.root, comp);
          Frame g;
          g.H = substitute_edge(f.H.project(comp), p, q, qbeta, c);
          g.E = E2;
          g.sigma = sigma2;
          g.prefix = prefix_with(f, sigma2, E2, c).project(comp);
          g.tower = comp;
          std::vector<Branch> local;
          if (mu == 1) finish_simple(ctx, g, local);
          else expand_frame(ctx, std::move(g), false, depth + 1, local);
          return local;
        });
        for (auto& [comp, branches] : runs)
          for (auto& b : branches) out.push_back(std::move(b));
      }
    }
  }
}

}  // namespace

std::vector<Branch> expand_branches(const BiPoly& F, const ExpansionOptions& options) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "expansion of the zero polynomial");
  if (F.degree_y().value_or(0) < 1) throw Error(ErrorCode::InvalidArgument, "expansion needs positive y-degree");
  Tower own = F.tower();
  if (!is_prefix(own, options.base) && !is_prefix(options.base, own))
    throw Error(ErrorCode::InvalidArgument, "expansion base tower is unrelated to the coefficients");
  Tower input = common_tower(own, options.base);
  std::vector<Branch> out;
  for (const auto& [part, mult] : squarefree_decomposition_y(F)) {
    Context ctx{options, mult, tower_depth(input)};
    Frame f;
    f.H = part;
    f.tower = input;
    expand_frame(ctx, std::move(f), true, 0, out);
  }
  return out;
}

std::vector<Branch> expand_branches(const BiPoly& F, const Rational& order) {
  ExpansionOptions options;
  options.order = order;
  return expand_branches(F, options);
}

}  // namespace imult
