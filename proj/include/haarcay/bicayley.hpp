#pragma once

#include <optional>
#include <vector>

#include "haarcay/graph.hpp"
#include "haarcay/group.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

/// Part-swapping map: h_0 -> (x h^alpha)_1, h_1 -> (y h^alpha)_0.
struct DeltaMap {
  GroupAutomorphism alpha;
  Element x = kIdentity, y = kIdentity;
  Perm perm;
};

/// Part-preserving map: h_0 -> (h^alpha)_0, h_1 -> (g h^alpha)_1.
struct SigmaMap {
  GroupAutomorphism alpha;
  Element g = kIdentity;
  Perm perm;
};

DeltaMap build_delta(const GroupTable& h, const GroupAutomorphism& alpha, Element x, Element y);
SigmaMap build_sigma(const GroupTable& h, const GroupAutomorphism& alpha, Element g);

/// R(g) on the vertices of a bi-Cayley graph: h_i -> (hg)_i.
Perm right_translation(const GroupTable& h, Element g);
/// R(g) for g in a generating sequence of H.
std::vector<Perm> right_translation_generators(const GroupTable& h);
/// R(H) as a permutation group of degree 2|H|.
PermGroup right_regular_group(const GroupTable& h);

/// Sigma maps with S^alpha = g^-1 S, each verified as an automorphism of
/// H(H,S). Ordered by (alpha, g). `aut` may supply a precomputed Aut(H).
std::vector<SigmaMap> compute_F(const GroupTable& h, const ElementSet& s,
                                const std::vector<GroupAutomorphism>* aut = nullptr);
/// Delta maps with S^alpha = y^-1 S^-1 x, each verified. Ordered by
/// (alpha, x, y), so the first entry is the lexicographically least.
std::vector<DeltaMap> compute_I(const GroupTable& h, const ElementSet& s,
                                const std::vector<GroupAutomorphism>* aut = nullptr);

struct NormalizerStructure {
  std::vector<SigmaMap> F;
  std::vector<DeltaMap> I;
  /// R(H) generators, all of F, and the least delta when I is non-empty.
  std::vector<Perm> generators;
  PermGroup group;
};

/// <R(H), F, delta>; asserts that it normalises R(H) and has order
/// |H||F| (I empty) or 2|H||F| (I non-empty).
NormalizerStructure normalizer_structure(const GroupTable& h, const ElementSet& s,
                                         const std::vector<GroupAutomorphism>* aut = nullptr);

/// <R(H), delta> for the least delta in I, asserted transitive.
std::optional<PermGroup> vt_certificate_via_I(const GroupTable& h, const ElementSet& s,
                                              const std::vector<GroupAutomorphism>* aut = nullptr);

struct DeltaCertificate {
  DeltaMap delta;
  PermGroup group;
};

/// First delta in I (lex order) with |<R(H), delta>| = 2|H|; the group is
/// asserted regular.
std::optional<DeltaCertificate> cayley_certificate_via_delta(const GroupTable& h, const ElementSet& s,
                                                             const std::vector<GroupAutomorphism>* aut = nullptr);

}  // namespace haarcay
