#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "haarcay/bitset.hpp"

namespace haarcay {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// Permutation of 0..n-1 by image table. Composition acts on the right:
/// (a * b)(x) = b(a(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t n);
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const;
  /// Smallest moved point, or degree() if identity.
  Point first_moved() const;
  bool has_fixed_point() const;
  /// Cycle lengths in order of the smallest point of each cycle.
  std::vector<std::size_t> cycle_lengths() const;
  std::size_t order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Permutation group with a base and strong generating set built by
/// deterministic Schreier-Sims. Base points are the smallest moved point
/// of the first strong generator not fixing the current base.
class PermGroup {
public:
  PermGroup() = default;
  /// `base_prefix` points are placed first in the base (in order).
  PermGroup(std::size_t degree, std::vector<Perm> gens, std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Point>& base() const { return base_; }
  const BigInt& order() const { return order_; }
  std::string order_string() const { return order_.str(); }

  bool contains(const Perm& g) const;

  /// Orbit partition; each orbit sorted, orbits ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point v) const;
  bool is_transitive() const;
  bool is_semiregular() const;
  bool is_regular() const;

  /// Pointwise stabilizer of v.
  PermGroup stabilizer(Point v) const;

  /// Calls f on every element (order = product over levels of transversal
  /// choices). Stops early when f returns false.
  void for_each_element(const std::function<bool(const Perm&)>& f) const;
  /// All elements; throws CapExceeded when the order exceeds `cap`.
  std::vector<Perm> elements(std::size_t cap = 1'000'000) const;

  /// Number of base levels.
  std::size_t levels() const { return levels_.size(); }
  /// Fundamental orbit at a level, in discovery order.
  const std::vector<Point>& fundamental_orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Transversal element mapping base[level] to `p` (p must be in the
  /// fundamental orbit).
  const Perm& transversal(std::size_t level, Point p) const;
  /// Strong generators fixing base[0..level-1] pointwise.
  const std::vector<Perm>& level_generators(std::size_t level) const { return levels_[level].gens; }

private:
  struct Level {
    Point point = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit/u, or -1
    std::vector<Perm> u, u_inv;
  };

  void schreier_sims(std::vector<Point> base_prefix);
  void rebuild_level(std::size_t i);
  /// Strips g through levels starting at `from`; returns residue and the
  /// level where it stopped (levels_.size() if fully sifted).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Stabilizer of the point set B (as a set). Backtrack search over base
/// images with B placed first in the base; throws BudgetExhausted after
/// `budget` nodes.
PermGroup setwise_stabilizer(const PermGroup& g, const Bitset& b, std::uint64_t budget = 10'000'000,
                             SearchStats* stats = nullptr);

/// Union-find orbits of the group generated by `gens` on `degree` points.
std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Perm>& gens);

}  // namespace haarcay
