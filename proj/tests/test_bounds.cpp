#include "doctest.h"
#include "imult/bounds.hpp"
#include "imult/campaign.hpp"
#include "imult/error.hpp"
#include "imult/parser.hpp"

using namespace imult;

namespace {

Point pt(long a, long b) { return {AlgNum(a), AlgNum(b)}; }

Rational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("bound formulas") {
  CHECK(multiplicity_bound(1, 1) == Q(5, 2));
  CHECK(multiplicity_bound(2, 3) == Q(90));
  CHECK(multiplicity_bound(3, 2) == Q(90));
  CHECK(assembly_bound(1, 1) == Q(0));
  CHECK(assembly_bound(1, 2) == Q(6));
  CHECK(assembly_bound(2, 3) == Q(58));
  CHECK(gabrielov_bound(2, 3) == Integer(216));
  CHECK(gabrielov_bound(1, 1) == Integer(2));
  CHECK(gabrielov_bound(2, 2) == Integer(18));
  for (long d = 1; d <= 6; ++d)
    for (long t = 1; t <= 6; ++t) CHECK(assembly_bound(d, t) <= multiplicity_bound(d, t));
  CHECK_THROWS_AS(multiplicity_bound(0, 2), Error);
  CHECK_THROWS_AS(assembly_bound(2, 0), Error);
  CHECK_THROWS_AS(gabrielov_bound(-1, 2), Error);
}

TEST_CASE("single instance") {
  auto F = parse_poly("y - 1");
  auto G = parse_poly("x^2 - 2*x + y");
  auto r = verify_bound_instance(F, G, pt(1, 1));
  CHECK(r.halphen == 2u);
  CHECK(r.agree);
  CHECK(r.d == 1);
  CHECK(r.t == 3);
  CHECK(r.ok());
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.verdicts[0].rhs == Q(45, 2));
  CHECK_THROWS_AS(verify_bound_instance(F, G, pt(0, 1)), Error);
  CHECK_THROWS_AS(verify_bound_instance(parse_poly("x - 1"), parse_poly("x^2 - 1"), pt(1, 1)), Error);
}

TEST_CASE("planted instances vanish at their point") {
  ExperimentConfig cfg;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto inst = planted_instance(rng, cfg);
    CHECK(inst.F.eval(inst.point.a, inst.point.b).is_zero());
    CHECK(inst.G.eval(inst.point.a, inst.point.b).is_zero());
    CHECK(!inst.point.a.is_zero());
    CHECK(!inst.point.b.is_zero());
    CHECK(*inst.F.total_degree() <= cfg.max_degree);
    CHECK(static_cast<std::int64_t>(inst.G.term_count()) <= cfg.max_terms);
  }
}

TEST_CASE("campaign") {
  ExperimentConfig cfg;
  auto rep = bound_campaign(cfg);
  CHECK(rep.instances.size() == 200);
  CHECK(rep.ok());
  std::uint64_t positive = 0;
  for (const auto& r : rep.instances) {
    CHECK(r.agree);
    CHECK(!r.halphen.infinite);
    if (r.halphen.value >= 1) ++positive;
  }
  CHECK(positive == 200);

  ExperimentConfig one = cfg;
  one.count = 20;
  one.threads = 1;
  ExperimentConfig many = one;
  many.threads = 4;
  auto a = bound_campaign(one), b = bound_campaign(many);
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].F == b.instances[i].F);
    CHECK(a.instances[i].halphen.value == b.instances[i].halphen.value);
  }
}

TEST_CASE("degenerate families") {
  auto rows = degenerate_family(24);
  REQUIRE(rows.size() == 48);
  for (const auto& row : rows) CHECK(row.multiplicity == static_cast<std::uint64_t>(row.n));
  CHECK(rows[0].bound == Q(10));
  CHECK(rows[1].bound == Q(45, 2));
  CHECK(!rows[2 * 9].exceeds);
  CHECK(rows[2 * 10].exceeds);
  CHECK(!rows[2 * 21 + 1].exceeds);
  CHECK(rows[2 * 22 + 1].exceeds);
}

TEST_CASE("f g + 1") {
  CHECK(fgplus1_instance(parse_unipoly("x - 1"), parse_unipoly("x - 1")).multiplicity == 1);
  CHECK(fgplus1_instance(parse_unipoly("x"), parse_unipoly("-x")).multiplicity == 1);
  CHECK(fgplus1_instance(parse_unipoly("x"), parse_unipoly("x - 2")).multiplicity == 2);
  // (x^2 + 1)^2 - 1 = x^2 (x^2 + 2): f = x^2, g = x^2 + 2, so f g + 1 = (x^2 + 1)^2
  CHECK(fgplus1_instance(parse_unipoly("x^2"), parse_unipoly("x^2 + 2")).multiplicity == 2);
  ExperimentConfig cfg;
  cfg.max_terms = 3;
  cfg.count = 300;
  auto rep = fgplus1_search(cfg);
  CHECK(rep.cap == 9);
  CHECK(rep.ok());
  CHECK(rep.observed_max >= 1);
  CHECK(!rep.extremal.empty());
}
