#include <random>

#include "doctest.h"
#include "imult/dense_poly.hpp"
#include "imult/tower.hpp"

using namespace imult;

namespace {

Tower cyclotomic3() { return adjoin_level(nullptr, {AlgNum(1), AlgNum(1), AlgNum(1)}); }

AlgNum random_element(std::mt19937_64& rng, const Tower& t) {
  std::uniform_int_distribution<int> coef(-5, 5);
  AlgNum acc;
  AlgNum power(1);
  std::vector<AlgNum> gens;
  for (std::uint32_t d = 1; d <= tower_depth(t); ++d) gens.push_back(tower_generator(tower_prefix(t, d)));
  // sum of random monomials in all generators
  for (int k = 0; k < 4; ++k) {
    AlgNum term = make_rational(coef(rng), 1 + (rng() % 3));
    for (const auto& g : gens) term *= g.pow(rng() % 3);
    acc += term.lifted(t);
  }
  return acc.lifted(t);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  AlgNum a = make_rational(1, 2), b = make_rational(1, 3);
  CHECK(a + b == AlgNum(make_rational(5, 6)));
  CHECK(AlgNum(make_rational(2, 3)).inverse() == AlgNum(make_rational(3, 2)));
  CHECK_THROWS_AS(AlgNum(0).inverse(), Error);
}

TEST_CASE("third root of unity") {
  Tower t = cyclotomic3();
  AlgNum w = tower_generator(t);
  AlgNum expected = -w - AlgNum(1);
  CHECK(w * w == expected);
  CHECK(w.inverse() == expected);
  CHECK((w * w).to_string() == "-z1 - 1");
  CHECK(w.pow(3) == AlgNum(1));
  CHECK((w * AlgNum(0)).is_zero());
}

TEST_CASE("zero divisor splits reducible modulus") {
  Tower t = adjoin_level(nullptr, {AlgNum(-1), AlgNum(0), AlgNum(1)});
  AlgNum u = tower_generator(t);
  auto r = try_invert(u - AlgNum(1));
  REQUIRE(std::holds_alternative<ZeroDivisor>(r));
  const auto& zd = std::get<ZeroDivisor>(r);
  CHECK(zd.depth() == 1);
  REQUIRE(zd.factor().size() == 2);
  CHECK(zd.factor()[0] == AlgNum(-1));
  CHECK(zd.cofactor()[0] == AlgNum(1));

  Tower a = split_tower(t, zd, true), b = split_tower(t, zd, false);
  CHECK(project(u, a) == AlgNum(1));
  CHECK(project(u, b) == AlgNum(-1));
  CHECK(conjugate_count(a, 0) == 1);

  auto results = run_with_splits(t, 0, [&](const Tower& c) {
    AlgNum v = project(u, c);
    return (v - AlgNum(1)).is_zero() ? 0 : (AlgNum(1) / (v - AlgNum(1))).rational() == make_rational(-1, 2);
  });
  CHECK(results.size() == 2);
}

TEST_CASE("adjoin_root") {
  CHECK(adjoin_root(nullptr, {AlgNum(-5), AlgNum(1)}) == AlgNum(5));
  AlgNum w = adjoin_root(nullptr, {AlgNum(-1), AlgNum(0), AlgNum(0), AlgNum(1)});
  REQUIRE(!w.is_rational());
  CHECK(level_modulus(w.tower(), 1) == std::vector<AlgNum>{AlgNum(1), AlgNum(1), AlgNum(1)});
  CHECK(w * w + w + AlgNum(1) == AlgNum(0));
  CHECK(adjoin_root(nullptr, {AlgNum(4), AlgNum(-4), AlgNum(1)}) == AlgNum(2));
  CHECK_THROWS_AS(adjoin_root(nullptr, {AlgNum(3)}), Error);

  auto classes = root_classes(nullptr, {AlgNum(-2), AlgNum(0), AlgNum(1), AlgNum(0), AlgNum(0)});
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].conjugates == 2);
}

TEST_CASE("adjoined root satisfies its modulus") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    Tower base = iter % 2 ? cyclotomic3() : nullptr;
    dense::Poly m;
    int deg = 2 + iter % 3;
    for (int i = 0; i < deg; ++i) m.push_back(random_element(rng, base));
    m.push_back(AlgNum(1).lifted(base));
    AlgNum r = adjoin_root(base, m);
    CHECK(dense::eval(m, r).is_zero());
  }
}

TEST_CASE("field laws in a two-level tower") {
  Tower t1 = adjoin_level(nullptr, {AlgNum(-2), AlgNum(0), AlgNum(1)});
  AlgNum s2 = tower_generator(t1);
  Tower t2 = adjoin_level(t1, {-s2 - AlgNum(3), AlgNum(0), AlgNum(1)});
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    AlgNum a = random_element(rng, t2), b = random_element(rng, t2), c = random_element(rng, t2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      auto inv = try_invert(a);
      REQUIRE(std::holds_alternative<AlgNum>(inv));
      CHECK(a * std::get<AlgNum>(inv) == AlgNum(1));
      if (!b.is_zero()) CHECK(!(a * b).is_zero());
    }
  }
}

TEST_CASE("no false zeros after splitting") {
  // x^4 - 1 is reducible over Q; elements are checked per split branch
  Tower t = adjoin_level(nullptr, {AlgNum(-1), AlgNum(0), AlgNum(0), AlgNum(0), AlgNum(1)});
  AlgNum u = tower_generator(t);
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    AlgNum a = random_element(rng, t), b = random_element(rng, t);
    auto runs = run_with_splits(t, 0, [&](const Tower& c) {
      AlgNum pa = project(a, c), pb = project(b, c);
      if (pa.is_zero() || pb.is_zero()) return true;
      pa.inverse();
      pb.inverse();
      return !(pa * pb).is_zero();
    });
    std::uint64_t total = 0;
    for (const auto& [c, ok] : runs) {
      CHECK(ok);
      total += conjugate_count(c, 0);
    }
    CHECK(total == 4);
  }
  (void)u;
}
