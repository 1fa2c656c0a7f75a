#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarcay/automorphism.hpp"
#include "haarcay/bicayley.hpp"
#include "haarcay/graph.hpp"
#include "haarcay/group.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

enum class Verdict { Cayley, NonCayley, Unknown };
std::string to_string(Verdict v);

struct RegularSearchOptions {
  /// Candidate-tree nodes plus closure steps.
  std::uint64_t budget = 10'000'000;
};

enum class SearchOutcome { Found, None, Exhausted };

struct RegularSearchResult {
  SearchOutcome outcome = SearchOutcome::None;
  /// Generators of the regular subgroup when found.
  std::vector<Perm> generators;
  std::uint64_t nodes = 0;
};

/// Looks for a subgroup of `a` acting regularly on its points. The subgroup
/// is built by choosing, for the smallest point not yet reached from 0, an
/// element of `a` mapping 0 there, and closing. None is definitive; an
/// exhausted budget is reported separately.
RegularSearchResult regular_subgroup_search(const PermGroup& a, const RegularSearchOptions& opts = {});

/// Provenance of a graph: H(H,S) for a group H and S, in the standard
/// vertex numbering.
struct HaarHint {
  const GroupTable* group = nullptr;
  ElementSet s;
};

/// Provenance of a Cayley graph Cay(H,R) (vertices = elements).
struct CayleyHint {
  const GroupTable* group = nullptr;
};

struct StatusHints {
  std::optional<HaarHint> haar;
  std::optional<CayleyHint> cayley;
};

struct StatusOptions {
  IROptions ir;
  RegularSearchOptions regular;
};

struct DeltaWitness {
  std::vector<Element> alpha;
  Element x = kIdentity, y = kIdentity;
};

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  /// "intransitive", "delta", "cayley-provenance", "regular-subgroup",
  /// "exhausted", or "budget".
  std::string method;
  /// Cayley: generators of a regular subgroup of Aut.
  std::vector<Perm> regular_generators;
  std::optional<DeltaWitness> delta;
  /// NonCayley by intransitivity: the vertex orbits of Aut.
  std::vector<std::vector<Vertex>> orbits;
  std::string aut_order;
  std::uint64_t nodes = 0;
  std::string budget_report;
};

/// Not vertex-transitive => NonCayley; hints => cheap certificates;
/// otherwise a regular-subgroup search (first inside the normaliser
/// structure when a Haar hint is present, then in all of Aut).
Certificate cayley_status(const Graph& g, const StatusHints& hints = {}, const StatusOptions& opts = {});

/// Re-checks a certificate against the graph from scratch.
bool verify_certificate(const Graph& g, const Certificate& c);

}  // namespace haarcay
