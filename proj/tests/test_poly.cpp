#include <random>

#include "doctest.h"
#include "imult/bipoly_gcd.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

BiPoly P(const char* s) { return parse_poly(s).poly; }

BiPoly random_poly(std::mt19937_64& rng, int deg, int terms) {
  std::uniform_int_distribution<int> coef(-4, 4);
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    int ex = static_cast<int>(rng() % (deg + 1));
    int ey = static_cast<int>(rng() % (deg + 1 - ex));
    p += BiPoly::monomial(AlgNum(coef(rng)), ex, ey);
  }
  return p;
}

// Determinant over Q by Gaussian elimination.
Rational det(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Sylvester resultant of two univariate coefficient lists (low to high).
Rational sylvester(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  std::size_t m = f.size() - 1, n = g.size() - 1;
  std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return det(s);
}

std::vector<Rational> specialize(const BiPoly& F, const Rational& x0) {
  std::vector<Rational> c(F.degree_y().value() + 1, Rational(0));
  for (const auto& [e, v] : F.terms()) {
    Rational p = 1;
    for (int i = 0; i < e.x; ++i) p *= x0;
    c[e.y] += v.rational() * p;
  }
  return c;
}

}  // namespace

TEST_CASE("bivariate arithmetic") {
  CHECK(P("(x - y)*(x + y)") == P("x^2 - y^2"));
  BiPoly F = P("x^3*y - 7*x + 2");
  CHECK((F + (-F)).is_zero());
  CHECK(!(F + (-F)).total_degree().has_value());
  CHECK(P("(y - x + x^2)^2") == P("y^2 - 2*x*y + 2*x^2*y + x^2 - 2*x^3 + x^4"));
  CHECK(F.term_count() == 3);
  CHECK(F.total_degree() == 4);
}

TEST_CASE("partial derivatives") {
  CHECK(P("y - x^2").partial_derivative(0, 1) == P("1"));
  BiPoly xy2 = P("x*y^2");
  CHECK(xy2.partial_derivative(1, 0).partial_derivative(0, 1) == P("2*y"));
  CHECK(xy2.partial_derivative(0, 1).partial_derivative(1, 0) == P("2*y"));
  CHECK(P("x^3*y").partial_derivative(2, 0) == P("6*x*y"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    BiPoly G = random_poly(rng, 5, 6);
    CHECK(G.partial_derivative(2, 1) == G.partial_derivative(0, 1).partial_derivative(2, 0));
  }
}

TEST_CASE("affine composition") {
  CHECK(P("x^2 - y^2").translate(AlgNum(1), AlgNum(1)) == P("2*x + x^2 - 2*y - y^2"));
  CHECK(P("x^2 - y^2").compose_affine(AffineMap::translation(AlgNum(1), AlgNum(1))) ==
        P("2*x + x^2 - 2*y - y^2"));
  BiPoly F = P("x^3 - 2*x*y + 5");
  CHECK(F.compose_affine(AffineMap{}) == F);
  CHECK(P("y").compose_affine(AffineMap::swap()) == P("x"));

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 30; ++i) {
    AffineMap L;
    L.m11 = c(rng), L.m12 = c(rng), L.m21 = c(rng), L.m22 = c(rng), L.t1 = c(rng), L.t2 = c(rng);
    if (L.determinant().is_zero()) continue;
    BiPoly G = random_poly(rng, 4, 5);
    CHECK(G.compose_affine(L).compose_affine(L.inverse()) == G);
    // translation agrees with the binomial expansion
    CHECK(G.translate(L.t1, L.t2) == G.compose_affine(AffineMap::translation(L.t1, L.t2)));
  }
}

TEST_CASE("degree and term count of products") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    BiPoly F = random_poly(rng, 4, 4), G = random_poly(rng, 4, 4);
    if (F.is_zero() || G.is_zero()) continue;
    BiPoly H = F * G;
    CHECK(*H.total_degree() == *F.total_degree() + *G.total_degree());
    CHECK(H.term_count() <= F.term_count() * G.term_count());
  }
}

TEST_CASE("large sparse exponents") {
  BiPoly F = P("x^1000000 - y^3 + 1");
  CHECK(F.total_degree() == 1000000);
  CHECK(F.term_count() == 3);
  CHECK((F * F).term_count() == 6);
  CHECK(F.eval(AlgNum(1), AlgNum(1)) == AlgNum(1));
  CHECK_THROWS_AS(P("x^9223372036854775807"), Error);
}

TEST_CASE("bivariate gcd") {
  BiPoly F1 = P("y^2 + x"), F2 = P("y - x^3 + 1");
  CHECK(gcd_bivariate(P("x") * F1, P("x") * F2) == P("x"));
  CHECK(gcd_bivariate(P("y - x"), P("y + x")).is_constant());
  CHECK(gcd_bivariate(P("(y - x)^2*(y + 1)"), P("(y - x)*(y - 1)")) == P("y - x"));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    BiPoly H = random_poly(rng, 2, 3), A = random_poly(rng, 3, 3), B = random_poly(rng, 3, 3);
    if (H.is_zero() || A.is_zero() || B.is_zero()) continue;
    BiPoly g = gcd_bivariate(H * A, H * B);
    CHECK(divides(g, H * A));
    CHECK(divides(g, H * B));
    CHECK(divides(H, g));
  }
}

TEST_CASE("resultant") {
  CHECK(resultant_y(P("y - x^2"), P("y")) == parse_unipoly("x^2"));
  UniPoly r = resultant_y(P("y - 2"), P("y - 5"));
  CHECK((r == UniPoly(AlgNum(3)) || r == UniPoly(AlgNum(-3))));

  std::mt19937_64 rng(23);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    BiPoly F = random_poly(rng, 3, 4), G = random_poly(rng, 3, 4);
    if (F.degree_y().value_or(0) < 1 || G.degree_y().value_or(0) < 1) continue;
    UniPoly res = resultant_y(F, G);
    CHECK(res.is_zero() == (gcd_bivariate(F, G).degree_y().value_or(0) > 0));
    for (int x0 = -2; x0 <= 2; ++x0) {
      auto f = specialize(F, x0), g = specialize(G, x0);
      if (f.back() == 0 || g.back() == 0) continue;
      CHECK(res.eval(AlgNum(x0)).rational() == sylvester(f, g));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("squarefree decomposition in y") {
  BiPoly F = P("(y - x)^3*(y^2 + x)*(y + 1)");
  auto parts = squarefree_decomposition_y(F);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == P("y^3 + y^2 + x*y + x"));
  CHECK(parts[1].second == 3);
  CHECK(parts[1].first == P("y - x"));
}

TEST_CASE("parser") {
  auto s = parse_poly("x - y");
  CHECK(s.terms() == 2);
  CHECK(s.degree() == 1);
  auto t = parse_poly("x^6 - y^3");
  CHECK(t.terms() == 2);
  CHECK(t.degree() == 6);
  CHECK_THROWS_AS(parse_poly("x + z"), Error);
  CHECK_THROWS_AS(parse_poly("x^-2"), Error);
  CHECK_THROWS_AS(parse_poly("x + * y"), Error);
  CHECK_THROWS_AS(parse_poly("y", true), Error);
  try {
    parse_poly("x + (y");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }

  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    BiPoly F = random_poly(rng, 6, 1 + static_cast<int>(rng() % 7));
    if (rng() % 3 == 0) F = F.scaled(AlgNum(make_rational(1, 1 + static_cast<long>(rng() % 5))));
    CHECK(parse_poly(F.to_string()).poly == F);
  }
}

TEST_CASE("series parser") {
  PuiseuxSeries s = parse_series("3*x^(-1/3) + 1 + O(x^2)");
  CHECK(s.ramification() == 3);
  CHECK(s.val().value == ExtRational(make_rational(-1, 3)));
  CHECK(s.truncation_order() == std::optional<Rational>(Rational(2)));
  CHECK(parse_series("x^(1/2) + x").val().value == ExtRational(make_rational(1, 2)));
}
