#pragma once

// Seeded instance generation and verification runs.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "imult/multiplicity.hpp"
#include "imult/parser.hpp"

namespace imult {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::int64_t max_terms = 4;
  std::int64_t max_degree = 3;
  std::int64_t exponent_cap = 6;
  std::int64_t coeff_range = 3;
  std::int64_t count = 200;
  std::int64_t order_cap = 64;
  unsigned threads = 0;  // 0: hardware concurrency
  bool record_timings = false;
};

/// An inequality lhs <= rhs checked on one instance.
struct Verdict {
  std::string formula;
  Rational lhs;
  Rational rhs;
  bool ok = false;
};

struct InstanceReport {
  std::string F;
  std::string G;
  Point point;
  std::int64_t d = 0;
  std::int64_t t = 0;
  MultiplicityResult halphen;
  MultiplicityResult oracle;
  bool agree = false;
  std::vector<Verdict> verdicts;
  double millis = 0;
  bool ok() const;
};

/// I_p(F, G) by Halphen and by the jet oracle, checked against the multiplicity bound and the
/// assembly bound in d = deg F and t = #monomials of G. Refuses points with a zero
/// coordinate, where no bound in d and t holds.
InstanceReport verify_bound_instance(const PolySpec& F, const PolySpec& G, const Point& p);

/// Random pair with a common zero at a random point with nonzero rational coordinates.
/// G has at most cfg.max_terms monomials; F has degree at most cfg.max_degree.
struct PlantedInstance {
  BiPoly F;
  BiPoly G;
  Point point;
};
PlantedInstance planted_instance(std::mt19937_64& rng, const ExperimentConfig& cfg);

struct CampaignReport {
  ExperimentConfig config;
  std::vector<InstanceReport> instances;
  std::int64_t passed = 0;
  bool ok() const { return passed == static_cast<std::int64_t>(instances.size()); }
};

CampaignReport bound_campaign(const ExperimentConfig& cfg);

/// I_p at the degenerate points of the families (x - y, x^{2n} - y^n) at the origin and
/// (x - 1, y^n + x - 1) at (1, 0), compared to the multiplicity bound for their d and t.
struct DegenerateRow {
  std::int64_t n = 0;
  std::string F;
  std::string G;
  std::string point;
  std::uint64_t multiplicity = 0;
  Rational bound;
  bool exceeds = false;
};
std::vector<DegenerateRow> degenerate_family(std::int64_t n_max);

struct FgRecord {
  std::string f;
  std::string g;
  std::string h;
  std::uint64_t multiplicity = 0;
};

struct FgReport {
  ExperimentConfig config;
  std::uint64_t observed_max = 0;
  std::uint64_t cap = 0;
  std::int64_t samples = 0;
  std::vector<FgRecord> extremal;
  bool ok() const { return observed_max <= cap; }
};

/// Largest multiplicity of a nonzero root of f g + 1 over random f, g with at most
/// cfg.max_terms monomials each, against the cap t^2.
FgReport fgplus1_search(const ExperimentConfig& cfg);
FgRecord fgplus1_instance(const UniPoly& f, const UniPoly& g);

/// Applies fn to every item on a pool of worker threads; results keep the input order.
/// The first exception thrown by fn is rethrown after all workers finish.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn, unsigned threads = 0)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace imult
