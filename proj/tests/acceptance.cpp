// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "imult/bounds.hpp"
#include "imult/campaign.hpp"
#include "imult/identities.hpp"
#include "imult/multiplicity.hpp"
#include "imult/newton.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

int failures = 0;

// Records a failed check with a short description on stderr.
bool expect(bool cond, const std::string& what) {
  if (!cond) {
    ++failures;
    std::cerr << "  check failed: " << what << "\n";
  }
  return cond;
}

BiPoly P(const char* s) { return parse_poly(s).poly; }
Rational Q(long n, long d = 1) { return make_rational(n, d); }
Point pt(long a, long b) { return {AlgNum(a), AlgNum(b)}; }

BiPoly random_poly(std::mt19937_64& rng, int deg, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    int ex = static_cast<int>(rng() % (deg + 1));
    int ey = static_cast<int>(rng() % (deg + 1 - ex));
    p += BiPoly::monomial(AlgNum(coef(rng)), ex, ey);
  }
  return p;
}

BiPoly through_origin(std::mt19937_64& rng, int deg, int terms) {
  for (;;) {
    BiPoly p = random_poly(rng, deg, terms);
    p -= BiPoly(p.coeff(0, 0));
    if (!p.is_zero()) return p;
  }
}

UniPoly random_sparse(std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  UniPoly f;
  for (int i = 0; i < terms; ++i)
    f += UniPoly::monomial(AlgNum(coef(rng)), static_cast<std::int64_t>(rng() % (maxdeg + 1)));
  return f;
}

PuiseuxSeries random_series(std::mt19937_64& rng, bool nonnegative) {
  std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 4);
  std::uniform_int_distribution<int> coef(-5, 5);
  PuiseuxSeries::Terms t;
  std::int64_t low = nonnegative ? 0 : -3;
  int n = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) {
    int c = coef(rng);
    t[low + static_cast<std::int64_t>(rng() % 12)] = AlgNum(c == 0 ? 1 : c);
  }
  return PuiseuxSeries(e, t, std::nullopt);
}

std::uint64_t total_roots(const std::vector<Branch>& bs) {
  std::uint64_t n = 0;
  for (const auto& b : bs) n += b.conjugates * static_cast<std::uint64_t>(b.multiplicity);
  return n;
}

// F(x - a, y - b): moves a curve through the origin to pass through (a, b).
BiPoly moved(const BiPoly& F, long a, long b) { return F.translate(AlgNum(-a), AlgNum(-b)); }

bool all_agree(const BiPoly& F, const BiPoly& G, const Point& p, std::uint64_t expected, const std::string& label) {
  bool ok = true;
  for (int form = 1; form <= 3; ++form)
    ok &= expect(halphen_multiplicity(F, G, p, form) == expected, label + " form " + std::to_string(form));
  ok &= expect(jet_oracle_multiplicity(F, G, p) == expected, label + " jet oracle");
  return ok;
}

void newton_example() {
  const char* product = "x*y*(y - x + x^2)^2*(y - 1 + x)*(x*y^3 - 1)";
  const char* expanded =
      "y*(x^3 - 3*x^4 + 3*x^5 - x^6) + y^2*(-2*x^2 + 3*x^3 - x^5) + y^3*(x + x^2 - 2*x^3)"
      " + y^4*(-x - x^4 + 3*x^5 - 3*x^6 + x^7) + y^5*(2*x^3 - 3*x^4 + x^6) + y^6*(-x^2 - x^3 + 2*x^4) + y^7*x^2";
  BiPoly F = P(product);
  expect(F == P(expanded), "expansion of the factored example");
  NewtonPolygon np = newton_polygon(F);
  std::vector<PolygonPoint> points{{1, 3}, {2, 2}, {3, 1}, {4, 1}, {5, 3}, {6, 2}, {7, 2}};
  expect(np.points == points, "polygon points");
  if (expect(np.edges.size() == 3, "three lower edges")) {
    expect(np.edges[0].slope == Q(-1) && np.edges[0].length == 2, "edge slope -1 length 2");
    expect(np.edges[1].slope == Q(0) && np.edges[1].length == 1, "edge slope 0 length 1");
    expect(np.edges[2].slope == Q(1, 3) && np.edges[2].length == 3, "edge slope 1/3 length 3");
  }
  expect(np.m == 1, "m = 1");
  expect(positive_valuation_count(F) == 3, "three positive-valuation roots");
}

void degenerate_points() {
  for (int n = 1; n <= 6; ++n) {
    BiPoly G = BiPoly::monomial(AlgNum(1), 2 * n, 0) - BiPoly::monomial(AlgNum(1), 0, n);
    all_agree(P("x - y"), G, pt(0, 0), static_cast<std::uint64_t>(n), "x - y vs x^2n - y^n, n=" + std::to_string(n));
    BiPoly G2 = BiPoly::monomial(AlgNum(1), 0, n) + P("x - 1");
    all_agree(P("x - 1"), G2, pt(1, 0), static_cast<std::uint64_t>(n), "x - 1 vs y^n + x - 1, n=" + std::to_string(n));
  }
}

void oracle_equivalence() {
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<int> c(-2, 2);
  int finite = 0, tried = 0;
  while (finite < 120 && tried < 1000) {
    ++tried;
    BiPoly F = through_origin(rng, 4, 1 + static_cast<int>(rng() % 5));
    BiPoly G = through_origin(rng, 4, 1 + static_cast<int>(rng() % 5));
    long a = 0, b = 0;
    if (tried % 2 == 0) a = c(rng), b = c(rng);
    F = moved(F, a, b);
    G = moved(G, a, b);
    Point p = pt(a, b);
    auto j = jet_oracle_multiplicity(F, G, p);
    if (j.infinite) {
      expect(is_infinite(F, G, p), "oracle infinite only on a common component");
      continue;
    }
    for (int form = 1; form <= 3; ++form) {
      auto h = halphen_multiplicity(F, G, p, form);
      expect(!h.infinite && h.value == j.value,
             "form " + std::to_string(form) + " on " + F.to_string() + ", " + G.to_string());
    }
    ++finite;
  }
  expect(finite >= 100, "at least 100 finite instances");
}

void root_and_valuation_inequalities() {
  std::mt19937_64 rng(401);
  int n = 0;
  while (n < 500) {
    UniPoly f = random_sparse(rng, 1 + static_cast<int>(rng() % 5), 14);
    if (rng() % 3 == 0) f = f * f;
    if (f.is_zero()) continue;
    expect(hajos_max_multiplicity(f) + 1 <= f.term_count(), "Hajos bound on " + f.to_string());
    ++n;
  }

  std::uniform_int_distribution<int> c(-3, 3);
  n = 0;
  int vanishing = 0;
  while (n < 500) {
    BiPoly G = random_poly(rng, 4, 1 + static_cast<int>(rng() % 5));
    int a = c(rng), b = c(rng);
    if (G.is_zero() || a == 0 || b == 0) continue;
    G -= BiPoly(G.eval(AlgNum(a), AlgNum(b)));
    BiPoly shifted = G.translate(AlgNum(a), AlgNum(b));
    if (G.is_zero() || shifted.degree_y().value_or(0) < 1) continue;
    std::int64_t s = shift_positive_count(G, pt(a, b));
    expect(s + 1 <= static_cast<std::int64_t>(G.term_count()), "shift count bound on " + G.to_string());
    expect(static_cast<std::int64_t>(total_roots(expand_branches(shifted, Q(1)))) == s,
           "shift count equals branch count on " + G.to_string());
    if (s > 0) ++vanishing;
    ++n;
  }
  expect(vanishing >= 100, "enough shifted instances with positive-valuation roots");

  for (int i = 0; i < 500; ++i) {
    PuiseuxSeries S = random_series(rng, false), T = random_series(rng, false);
    ExtRational vs = S.val().value, vt = T.val().value;
    PuiseuxSeries dS = S.derivative();
    expect(dS.val().value >= vs + ExtRational(Q(-1)), "val S' >= val S - 1 on " + S.to_string());
    expect((S * T).val().value == vs + vt, "val ST = val S + val T");
  }

  n = 0;
  int tries = 0;
  while (n < 500 && tries < 5000) {
    ++tries;
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<PuiseuxSeries> v;
    for (int i = 0; i < k; ++i) v.push_back(random_series(rng, true));
    PuiseuxSeries W = wronskian(v), sum;
    for (const auto& s : v) sum += s;
    if (!W.has_terms() || !sum.has_terms()) continue;
    expect(sum.val().value <= ExtRational(Q(k * (k - 1), 2)) + W.val().value, "valuation bounded by the wronskian");
    ++n;
  }
  expect(n >= 500, "500 tuples with nonzero wronskian");

  for (int i = 0; i < 100; ++i) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<PuiseuxSeries> v;
    std::vector<Rational> alphas;
    Rational total = 0;
    while (static_cast<int>(alphas.size()) < k) {
      Rational a = make_rational(static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 3));
      if (std::find(alphas.begin(), alphas.end(), a) != alphas.end()) continue;
      alphas.push_back(a);
      total += a;
      v.push_back(PuiseuxSeries::monomial(AlgNum(1), a));
    }
    expect(wronskian(v).val().value == ExtRational(total - Q(k * (k - 1), 2)), "wronskian valuation of monomials");
  }
}

void multiplicity_laws() {
  std::mt19937_64 rng(501);
  std::uniform_int_distribution<int> cd(-2, 2);
  int symmetric = 0, additive = 0, affine = 0, infinite = 0;
  while (symmetric < 50 || additive < 50 || affine < 50) {
    BiPoly F1 = through_origin(rng, 2, 3), F2 = through_origin(rng, 2, 3), G = through_origin(rng, 2, 3);
    if (is_infinite(F1 * F2, G, pt(0, 0))) continue;
    auto a = halphen_multiplicity(F1 * F2, G, pt(0, 0));
    auto b = halphen_multiplicity(F1, G, pt(0, 0));
    auto c = halphen_multiplicity(F2, G, pt(0, 0));
    expect(a.value == b.value + c.value, "additivity");
    ++additive;
    expect(halphen_multiplicity(G, F1 * F2, pt(0, 0)).value == a.value, "symmetry");
    expect(jet_oracle_multiplicity(G, F1, pt(0, 0)).value == b.value, "symmetry against the oracle");
    ++symmetric;
    AffineMap L;
    L.m11 = cd(rng), L.m12 = cd(rng), L.m21 = cd(rng), L.m22 = cd(rng), L.t1 = cd(rng), L.t2 = cd(rng);
    if (L.determinant().is_zero()) continue;
    auto [u, v] = L.inverse().apply(AlgNum(0), AlgNum(0));
    expect(halphen_multiplicity(F1.compose_affine(L), G.compose_affine(L), {u, v}).value == b.value,
           "affine invariance");
    ++affine;
  }
  while (infinite < 50) {
    long a = cd(rng), b = cd(rng);
    BiPoly F1 = random_poly(rng, 2, 3), G1 = random_poly(rng, 2, 3);
    if (F1.is_zero() || G1.is_zero()) continue;
    BiPoly line = P("x") - BiPoly(AlgNum(a));
    Point p = pt(a, b);
    auto h = halphen_multiplicity(line * F1, line * G1, p);
    expect(h.infinite && h.m > 0 && h.n > 0, "common x-factor gives INFINITE");
    expect(jet_oracle_multiplicity(line * F1, line * G1, p).infinite, "oracle agrees on INFINITE");
    ++infinite;
  }
}

void derivative_identities() {
  expect(to_string(build_R(1)) == "-x[1,0]", "R_1");
  for (std::uint64_t k = 1; k <= 5; ++k)
    expect(build_R(k).degree() <= 2 * k - 1, "deg R_" + std::to_string(k));
  for (std::uint64_t k = 0; k <= 5; ++k)
    for (std::uint64_t l = 0; k + l <= 5; ++l) {
      if (k + l == 0) continue;
      expect(build_Rbar(k, l).numerator.degree() <= 2 * k + l,
             "deg Rbar_" + std::to_string(k) + "," + std::to_string(l));
    }

  for (const char* text : {"y - x^2", "y^2 - x^3"}) {
    BiPoly F = P(text);
    for (const auto& br : expand_branches(F, Q(12)))
      for (std::uint64_t k = 1; k <= 4; ++k)
        expect(verify_root_derivative_identity(F, br, k), std::string("root identity on ") + text);
  }
  std::mt19937_64 rng(601);
  int fixtures = 0;
  while (fixtures < 20) {
    BiPoly F = random_poly(rng, 3, 4);
    F -= BiPoly(F.coeff(0, 0));
    if (F.degree_y().value_or(0) < 1) continue;
    bool any = false;
    for (const auto& br : expand_branches(F, Q(16))) {
      if (br.multiplicity != 1) continue;
      any = true;
      for (std::uint64_t k = 1; k <= 4; ++k)
        expect(verify_root_derivative_identity(F, br, k), "root identity on " + F.to_string());
    }
    if (any) ++fixtures;
  }

  std::uniform_int_distribution<int> c(-4, 4);
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= 6; ++k) {
      PuiseuxSeries::Terms t;
      for (int i = 0; i < 3; ++i) {
        int v = c(rng);
        t[static_cast<std::int64_t>(1 + rng() % 9)] = AlgNum(v == 0 ? 1 : v);
      }
      PuiseuxSeries R(1 + static_cast<std::int64_t>(rng() % 3), t, std::nullopt);
      auto d = derivative_of_power(R, n, k);
      expect(d.direct == d.structured, "power derivative n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void bound_campaign_check() {
  ExperimentConfig cfg;
  auto rep = bound_campaign(cfg);
  expect(rep.instances.size() == 200, "200 instances");
  for (const auto& r : rep.instances) {
    expect(r.agree, "Halphen and oracle agree on " + r.F + ", " + r.G);
    expect(!r.halphen.infinite && r.halphen.value >= 1, "planted point is an isolated common zero");
    expect(!r.point.a.is_zero() && !r.point.b.is_zero(), "nonzero coordinates");
    expect(r.d <= cfg.max_degree && r.t <= cfg.max_terms, "instance within caps");
    expect(r.verdicts.size() == 2, "two verdicts");
    for (const auto& v : r.verdicts) expect(v.ok, v.formula + " on " + r.F + ", " + r.G);
  }

  auto rows = degenerate_family(24);
  bool first_exceeds = false, second_exceeds = false;
  for (const auto& row : rows) {
    expect(row.multiplicity == static_cast<std::uint64_t>(row.n), "degenerate multiplicity is n");
    expect(row.exceeds == (Rational(static_cast<long>(row.n)) > row.bound), "exceeds flag");
    if (row.point == "0,0") {
      expect(row.bound == multiplicity_bound(1, 2), "constant d, t in the first family");
      first_exceeds |= row.exceeds;
    } else {
      expect(row.bound == multiplicity_bound(1, 3), "constant d, t in the second family");
      second_exceeds |= row.exceeds;
    }
  }
  expect(first_exceeds && second_exceeds, "both zero-coordinate families exceed the bound for large n");
}

void bezout() {
  {
    Tower base;
    AlgNum r = adjoin_root(base, {AlgNum(make_rational(-1, 2)), AlgNum(0), AlgNum(1)});
    auto b = bezout_sum_check(P("x^2 + y^2 - 1"), P("x - y"), {{r, r}, {-r, -r}});
    expect(b.ok && b.sum == 2 && b.bound == 2, "circle and diagonal");
  }
  {
    auto b = bezout_sum_check(P("y - x^2"), P("y"), {pt(0, 0)});
    expect(b.ok && b.sum == 2 && b.bound == 2, "tangent parabola");
  }
  {
    Tower base;
    AlgNum w = adjoin_root(base, {AlgNum(1), AlgNum(1), AlgNum(1)});
    auto b = bezout_sum_check(P("x - y"), P("x^6 - y^3"), {pt(0, 0), pt(1, 1), {w, w}, {w * w, w * w}});
    expect(b.ok && b.sum == 6 && b.bound == 6, "line and x^6 - y^3");
  }

  std::mt19937_64 rng(801);
  std::uniform_int_distribution<int> c(-4, 4);
  auto distinct = [&](int count) {
    std::vector<long> out;
    while (static_cast<int>(out.size()) < count) {
      long v = c(rng);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  };
  for (int i = 0; i < 10; ++i) {
    // F = prod (x - a_i)^e_i, G = prod (y - b_j)^f_j: I at (a_i, b_j) is e_i f_j
    auto as = distinct(1 + static_cast<int>(rng() % 3)), bs = distinct(1 + static_cast<int>(rng() % 3));
    BiPoly F(AlgNum(1)), G(AlgNum(1));
    std::vector<Point> pts;
    std::uint64_t degF = 0, degG = 0;
    for (long a : as) {
      int e = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < e; ++k) F = F * (P("x") - BiPoly(AlgNum(a)));
      degF += e;
    }
    for (long b : bs) {
      int f = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < f; ++k) G = G * (P("y") - BiPoly(AlgNum(b)));
      degG += f;
    }
    for (long a : as)
      for (long b : bs) pts.push_back(pt(a, b));
    auto r = bezout_sum_check(F, G, pts);
    expect(r.ok && r.sum == degF * degG && r.bound == degF * degG, "grid instance attains the bound");
  }
  for (int i = 0; i < 10; ++i) {
    // F = y - f(x), G = prod (x - r_i)^k_i: I at (r_i, f(r_i)) is k_i
    UniPoly f;
    while (f.degree().value_or(0) < 1) f = random_sparse(rng, 3, 3);
    BiPoly F = P("y");
    for (const auto& [e, coef] : f.terms()) F -= BiPoly::monomial(coef, e, 0);
    auto rs = distinct(1 + static_cast<int>(rng() % 3));
    BiPoly G(AlgNum(1));
    std::vector<Point> pts;
    std::uint64_t total = 0;
    for (long r : rs) {
      int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) G = G * (P("x") - BiPoly(AlgNum(r)));
      total += k;
      pts.push_back({AlgNum(r), f.eval(AlgNum(r))});
    }
    auto r = bezout_sum_check(F, G, pts);
    expect(r.ok && r.sum == total, "graph instance sum equals the planted multiplicities");
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Newton polygon example", 1, newton_example},
      {2, "degenerate-point families", 10, degenerate_points},
      {3, "Halphen forms match the jet oracle", 120, oracle_equivalence},
      {4, "root and valuation inequalities", 180, root_and_valuation_inequalities},
      {5, "intersection multiplicity laws", 120, multiplicity_laws},
      {6, "derivative identity machinery", 120, derivative_identities},
      {7, "bound campaign and zero-coordinate families", 300, bound_campaign_check},
      {8, "Bezout sums", 60, bezout},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    int before = failures;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = expect(secs < c.limit_seconds, "time limit exceeded");
    bool ok = failures == before && in_time;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name, secs,
                c.limit_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
