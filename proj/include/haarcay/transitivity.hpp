#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarcay/group.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

/// Element of the integer group ring ZH: one coefficient per group element.
class GroupRingVector {
public:
  explicit GroupRingVector(const GroupTable& h);
  GroupRingVector(const GroupTable& h, std::vector<std::int64_t> coeffs);
  /// The simple quantity of a subset.
  static GroupRingVector simple(const GroupTable& h, const ElementSet& s);
  static GroupRingVector singleton(const GroupTable& h, Element x);

  const GroupTable& group() const { return *h_; }
  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](Element x) const { return c_[x]; }
  void set(Element x, std::int64_t v) { c_[x] = v; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  /// 0/1 coefficients only.
  bool is_simple() const;
  ElementSet support() const;

  GroupRingVector& operator+=(const GroupRingVector& o);
  friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
  GroupRingVector scaled(std::int64_t k) const;

  friend bool operator==(const GroupRingVector& a, const GroupRingVector& b) { return a.c_ == b.c_; }

private:
  const GroupTable* h_;
  std::vector<std::int64_t> c_;
};

/// (u v)_h = sum_g u_g v_{g^-1 h}. Throws on overflow or table mismatch.
GroupRingVector convolution(const GroupRingVector& u, const GroupRingVector& v);
/// Coefficient-wise product.
GroupRingVector schur_hadamard(const GroupRingVector& u, const GroupRingVector& v);
/// Simple quantity of {h : u_h = c}.
GroupRingVector level_set(const GroupRingVector& u, std::int64_t c);
/// Coefficient of h moved to h^-1.
GroupRingVector inverse_closure(const GroupRingVector& u);
/// Simple quantity of the subgroup generated by the support of a simple
/// quantity.
GroupRingVector generated_subgroup_quantity(const GroupRingVector& u);

/// x -> xg on the element set.
Perm right_translation_on(const GroupTable& h, Element g);
/// x -> g^-1 x on the element set.
Perm left_translation_on(const GroupTable& h, Element g);
/// R(H) acting on the element set.
PermGroup right_regular_action(const GroupTable& h);

/// Span of the basic quantities of the point stabiliser G_1 of a group G
/// with R(H) <= G acting on the elements of H.
class TransitivityModule {
public:
  TransitivityModule(const GroupTable& h, std::vector<std::vector<Element>> basic_sets);

  const GroupTable& group() const { return *h_; }
  /// Sorted sets ordered by smallest element; {1} comes first.
  const std::vector<std::vector<Element>>& basic_sets() const { return sets_; }
  std::size_t basic_set_of(Element x) const { return of_[x]; }
  GroupRingVector basic_quantity(std::size_t i) const;

  /// Coefficients on the basic sets when u is in the span.
  std::optional<std::vector<std::int64_t>> decompose(const GroupRingVector& u) const;
  bool contains(const GroupRingVector& u) const { return decompose(u).has_value(); }
  bool is_basic(const ElementSet& s) const;

private:
  const GroupTable* h_;
  std::vector<std::vector<Element>> sets_;
  std::vector<std::size_t> of_;
};

/// Throws PreconditionError unless G contains every right translation.
TransitivityModule transitivity_module(const GroupTable& h, const PermGroup& g);

/// B^g = B or B^g disjoint from B for all g in G; decided by building the
/// orbit of B. Throws PreconditionError if G is intransitive.
bool is_block_of_imprimitivity(const PermGroup& g, const Bitset& b);

struct LawResult {
  std::string law;
  bool pass = true;
  std::string counterexample;
};

struct LawReport {
  std::vector<LawResult> laws;
  bool all_pass() const;
};

/// Closure laws of a transitivity module: ring closure, level sets,
/// Schur-Hadamard closure, generated subgroups, inverses, translates of
/// basic sets by singletons, blocks, and centralising left translations.
LawReport module_law_suite(const GroupTable& h, const PermGroup& g);

}  // namespace haarcay
