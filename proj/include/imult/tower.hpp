#pragma once

// Exact algebraic numbers in a dynamically extended tower over the rationals.
//
// Each level adjoins a root of a monic squarefree modulus whose coefficients lie in the
// level below. Moduli may be reducible: a failed inversion raises ZeroDivisor carrying a
// nontrivial factorization, and the caller splits its computation into one branch per
// factor (dynamic evaluation). Values are immutable and safe to share across threads.

#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "imult/rational.hpp"

namespace imult {

/// Canonical representative. Level 0 is the rational `q`. Level L > 0 is the polynomial
/// sum c[i] * z_L^i with at least two coefficients, a nonzero last one, and every
/// coefficient at a level strictly below L.
struct Rep {
  std::uint32_t level = 0;
  Rational q;
  std::vector<Rep> c;

  Rep() = default;
  explicit Rep(Rational value) : q(std::move(value)) {}

  bool is_zero() const { return level == 0 && sgn(q) == 0; }
  friend bool operator==(const Rep& a, const Rep& b);
};

class TowerLevel;
/// A tower is identified by its top level; nullptr is the rationals.
using Tower = std::shared_ptr<const TowerLevel>;

class TowerLevel : public std::enable_shared_from_this<TowerLevel> {
 public:
  TowerLevel(Tower parent, std::vector<Rep> modulus);

  std::uint32_t depth() const { return depth_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  /// Monic modulus, low to high, coefficients below this level.
  const std::vector<Rep>& modulus() const { return modulus_; }
  const Tower& parent() const { return parent_; }
  /// Ancestor (or self) at depth d, 1 <= d <= depth().
  const TowerLevel* at(std::uint32_t d) const { return path_[d]; }

 private:
  Tower parent_;
  std::uint32_t depth_;
  std::vector<Rep> modulus_;
  std::vector<const TowerLevel*> path_;
};

std::uint32_t tower_depth(const Tower& t);
Tower tower_prefix(const Tower& t, std::uint32_t depth);
bool is_prefix(const Tower& shorter, const Tower& longer);
/// The deeper of two towers when one is a prefix of the other.
Tower common_tower(const Tower& a, const Tower& b);
/// Product of the modulus degrees of the levels strictly above `base_depth`.
std::uint64_t conjugate_count(const Tower& t, std::uint32_t base_depth);

class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long v) : rep_(Rational(v)) {}               // NOLINT(google-explicit-constructor)
  AlgNum(int v) : rep_(Rational(v)) {}                // NOLINT(google-explicit-constructor)
  AlgNum(const Rational& v) : rep_(v) {}              // NOLINT(google-explicit-constructor)
  AlgNum(const Integer& v) : rep_(Rational(v)) {}     // NOLINT(google-explicit-constructor)
  AlgNum(Tower tower, Rep rep);

  const Tower& tower() const { return tower_; }
  const Rep& rep() const { return rep_; }

  /// Representative is zero. A nonzero element may still be a zero divisor.
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.level == 0 && rep_.q == 1; }
  bool is_rational() const { return rep_.level == 0; }
  const Rational& rational() const;

  /// Same element viewed in a tower extending this element's tower.
  AlgNum lifted(const Tower& tower) const;

  AlgNum operator-() const;
  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  AlgNum& operator+=(const AlgNum& b) { return *this = *this + b; }
  AlgNum& operator-=(const AlgNum& b) { return *this = *this - b; }
  AlgNum& operator*=(const AlgNum& b) { return *this = *this * b; }
  friend bool operator==(const AlgNum& a, const AlgNum& b);

  AlgNum pow(std::uint64_t e) const;

  /// Throws Error(DivisionByZero) for zero and ZeroDivisor when the element is a zero
  /// divisor of a reducible modulus.
  AlgNum inverse() const;

  std::string to_string() const;

 private:
  Tower tower_;
  Rep rep_;
};

/// Signal that a modulus factors as factor * cofactor (both monic, positive degree).
class ZeroDivisor : public std::exception {
 public:
  ZeroDivisor(Tower node, std::vector<AlgNum> factor, std::vector<AlgNum> cofactor);

  const Tower& node() const { return node_; }
  std::uint32_t depth() const;
  const std::vector<AlgNum>& factor() const { return factor_; }
  const std::vector<AlgNum>& cofactor() const { return cofactor_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  Tower node_;
  std::vector<AlgNum> factor_;
  std::vector<AlgNum> cofactor_;
  std::string message_;
};

using InvertResult = std::variant<AlgNum, ZeroDivisor>;
/// Inverse, or the zero-divisor split. Throws Error(DivisionByZero) for zero.
InvertResult try_invert(const AlgNum& a);

/// Generator of the top level of `t`.
AlgNum tower_generator(const Tower& t);
/// Adjoins one level; the modulus must be monic of degree >= 2 over `base`.
Tower adjoin_level(const Tower& base, const std::vector<AlgNum>& monic_modulus);
/// Modulus of level `depth` as elements of the level below.
std::vector<AlgNum> level_modulus(const Tower& t, std::uint32_t depth);
/// Modulus of level `depth` as text in z<depth>, e.g. "z1^2 - 2".
std::string modulus_text(const Tower& t, std::uint32_t depth);

/// A root of a polynomial together with the number of conjugate roots it stands for.
struct RootClass {
  AlgNum root;
  std::uint64_t conjugates = 1;
};

/// All roots of `poly` (coefficients over `base`, low to high), without multiplicity:
/// squarefree part, rational roots stripped when the coefficients are rational, the
/// residual of degree >= 2 adjoined as one new level.
std::vector<RootClass> root_classes(const Tower& base, const std::vector<AlgNum>& poly);

/// Adjoins a root of `modulus`: squarefree part, rational linear factors stripped; returns
/// the new generator, or a rational root when no residual of degree >= 2 remains.
AlgNum adjoin_root(const Tower& base, const std::vector<AlgNum>& modulus);

/// Rebuilds `t` with the level named by `zd` replaced by one of its factors; levels above
/// are carried over with their moduli reduced.
Tower split_tower(const Tower& t, const ZeroDivisor& zd, bool take_factor);

/// Maps an element into a split image of (a tower extending) its own tower.
AlgNum project(const AlgNum& a, const Tower& target);

/// `joint` is `base` followed by the levels of `other` above `common_depth`.
struct Graft {
  Tower joint;
  Tower other;
  std::uint32_t common_depth = 0;
  std::uint32_t shift = 0;
};
Graft graft(const Tower& base, const Tower& other, std::uint32_t common_depth);
AlgNum graft_map(const Graft& g, const AlgNum& from_other);

/// Runs `fn(component)` on `tower`; whenever a zero divisor at a level above `base_depth`
/// escapes, the tower is split and `fn` is rerun on each factor's component. Zero divisors
/// at or below `base_depth` propagate. `fn` must project its inputs into the component.
template <class Fn>
auto run_with_splits(const Tower& tower, std::uint32_t base_depth, Fn&& fn)
    -> std::vector<std::pair<Tower, decltype(fn(tower))>> {
  using Result = decltype(fn(tower));
  std::vector<std::pair<Tower, Result>> done;
  std::vector<Tower> work{tower};
  while (!work.empty()) {
    Tower t = std::move(work.back());
    work.pop_back();
    try {
      done.emplace_back(t, fn(t));
    } catch (const ZeroDivisor& zd) {
      std::uint32_t d = zd.depth();
      if (d <= base_depth || d > tower_depth(t) || t->at(d) != zd.node().get()) throw;
      work.push_back(split_tower(t, zd, false));
      work.push_back(split_tower(t, zd, true));
    }
  }
  return done;
}

}  // namespace imult
