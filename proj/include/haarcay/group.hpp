#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "haarcay/bitset.hpp"

namespace haarcay {

/// Dense element index into a GroupTable. The identity is always 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Largest group order a GroupTable accepts.
inline constexpr std::size_t kMaxGroupOrder = 1024;

struct NamedGenerator {
  std::string label;
  Element element;
};

/// A finite group given by its full multiplication table.
///
/// Construction validates the group axioms: the table must be a Latin
/// square with identity at index 0; associativity is checked exhaustively up
/// to order 100 and on a deterministic sample above that. Immutable once
/// built, so it can be shared freely between threads.
class GroupTable {
public:
  GroupTable(std::size_t order, std::vector<Element> mult,
             std::vector<NamedGenerator> gens, std::string family_tag = {});

  std::size_t order() const { return order_; }
  Element mul(Element x, Element y) const { return mult_[x * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element pow(Element x, long long k) const;
  /// x^y = y^-1 x y.
  Element conj(Element x, Element y) const { return mul(inv(y), mul(x, y)); }
  /// [x,y] = x^-1 y^-1 x y.
  Element commutator(Element x, Element y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  std::size_t element_order(Element x) const { return elem_order_[x]; }

  const std::vector<NamedGenerator>& gens() const { return gens_; }
  std::optional<Element> generator(std::string_view label) const;
  const std::string& family_tag() const { return tag_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

private:
  std::size_t order_;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::size_t> elem_order_;
  std::vector<NamedGenerator> gens_;
  std::string tag_;
};

// Free-function spellings of the table lookups.
inline Element multiply(const GroupTable& h, Element x, Element y) { return h.mul(x, y); }
inline Element inverse(const GroupTable& h, Element x) { return h.inv(x); }
inline std::size_t element_order(const GroupTable& h, Element x) { return h.element_order(x); }

/// Subset of the element set of one particular group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t order) : bits_(order) {}
  ElementSet(std::size_t order, std::initializer_list<Element> elems);
  static ElementSet from(std::size_t order, const std::vector<Element>& elems);
  static ElementSet all(std::size_t order);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Element x) const { return bits_.test(x); }
  void insert(Element x) { bits_.set(x); }
  void erase(Element x) { bits_.reset(x); }
  std::vector<Element> elements() const;
  const Bitset& bits() const { return bits_; }

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  bool is_subset_of(const ElementSet& o) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.bits_ <=> b.bits_; }

private:
  void same_universe(const ElementSet& o) const;
  Bitset bits_;
};

/// xS
ElementSet left_translate(const GroupTable& h, Element x, const ElementSet& s);
/// Sx
ElementSet right_translate(const GroupTable& h, const ElementSet& s, Element x);
/// S^-1
ElementSet inverse_set(const GroupTable& h, const ElementSet& s);

/// A bijection of the element set preserving the multiplication.
struct GroupAutomorphism {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  std::size_t degree() const { return images.size(); }
  static GroupAutomorphism identity(std::size_t order);
  /// Apply `this` first, then `next`.
  GroupAutomorphism then(const GroupAutomorphism& next) const;
  GroupAutomorphism inverse() const;
  bool is_identity() const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
  friend auto operator<=>(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// Image of a subset under an automorphism (S^alpha).
ElementSet apply(const GroupAutomorphism& a, const ElementSet& s);

/// True iff `images` is a bijection preserving the table of `h`.
bool is_automorphism(const GroupTable& h, const std::vector<Element>& images);

ElementSet subgroup_generated(const GroupTable& h, const ElementSet& x);
bool is_subgroup(const GroupTable& h, const ElementSet& n);
bool is_abelian(const GroupTable& h);
/// Throws PreconditionError if `n` is not a subgroup.
bool is_normal(const GroupTable& h, const ElementSet& n);
ElementSet center(const GroupTable& h);

struct Quotient {
  GroupTable group;
  /// projection[x] is the coset index of xN.
  std::vector<Element> projection;
};

/// H/N. Cosets are numbered by their smallest element index, so the identity
/// coset is 0. Generator labels carry over to their images.
Quotient quotient(const GroupTable& h, const ElementSet& n);

/// Greedy generating sequence: each step adds the element that enlarges the
/// generated subgroup most (ties to the smallest index).
std::vector<Element> generating_sequence(const GroupTable& h);

struct AutOptions {
  std::size_t max_order = 200;
  std::size_t max_automorphisms = 1'000'000;
};

/// All automorphisms of `h`, sorted by image table; the identity comes first.
std::vector<GroupAutomorphism> automorphism_group_of_group(const GroupTable& h,
                                                           const AutOptions& opts = {});

/// x -> y^-1 x y
GroupAutomorphism inner_automorphism(const GroupTable& h, Element y);

/// An isomorphism h1 -> h2 as an image table, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const GroupTable& h1, const GroupTable& h2);
inline bool are_isomorphic(const GroupTable& h1, const GroupTable& h2) {
  return find_isomorphism(h1, h2).has_value();
}

/// Non-abelian with every proper subgroup abelian. Checked as: every
/// non-commuting pair generates the whole group.
bool is_inner_abelian(const GroupTable& h);

}  // namespace haarcay
