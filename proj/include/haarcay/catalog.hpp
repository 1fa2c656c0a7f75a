#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "haarcay/cayley.hpp"
#include "haarcay/families.hpp"
#include "haarcay/graph.hpp"
#include "haarcay/group.hpp"
#include "haarcay/serialize.hpp"

namespace haarcay {

// ---------------------------------------------------------------------------
// Quotient obstruction

struct ObstructionOptions {
  StatusOptions status;
};

struct ObstructionReport {
  std::size_t group_order = 0, normal_order = 0, quotient_order = 0;
  std::vector<Element> normal;
  /// S-bar over the quotient, and its preimage in H.
  std::vector<Element> sbar, preimage;
  /// Condition (i) holds when H(H/N, S-bar) is not vertex-transitive.
  bool quotient_vertex_transitive = true;
  std::vector<std::vector<Vertex>> quotient_orbits;
  /// Non-identity x with S-bar x = S-bar, and with x S-bar = S-bar.
  std::vector<Element> right_stable, left_stable;
  /// H(H, preimage) is isomorphic to H(H/N, S-bar)[n K_1], checked through
  /// the explicit map h_i -> ((hN)_i, position of h in hN).
  bool blowup_isomorphic = false;
  std::uint64_t nodes = 0;

  bool condition_i() const { return !quotient_vertex_transitive; }
  bool condition_ii() const { return right_stable.empty() && left_stable.empty(); }
  bool obstructed() const { return condition_i() && condition_ii(); }
  std::string conclusion() const { return obstructed() ? "H not in BC" : "inconclusive"; }
};

/// Checks whether N and S-bar (a subset of quotient(h, n)) show that H has a
/// non-Cayley Haar graph. Throws PreconditionError if N is not normal,
/// InvariantViolation if the blow-up isomorphism fails.
ObstructionReport check_quotient_obstruction(const GroupTable& h, const ElementSet& n, const ElementSet& sbar,
                                             const ObstructionOptions& opts = {});

Json obstruction_to_json(const ObstructionReport& r);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerateOptions {
  bool connected_only = false;
  bool dedupe = true;
  StatusOptions status;
  /// Exhaustive enumeration is refused above this order.
  std::size_t max_order = 16;
};

struct EnumeratedHaar {
  ElementSet s;
  /// Number of subsets containing 1 in the class of `s` (1 without dedupe).
  std::size_t class_size = 1;
  Certificate certificate;
  bool verified = false;
};

/// Class of every subset S containing 1, given by its least mask, under S -> S^alpha, S -> s^-1 S (s in S) and S -> S^-1.
/// Subsets are encoded as bitmasks over the non-identity elements.
struct HaarClasses {
  std::vector<std::uint32_t> representative;  // per mask: the class minimum
  std::vector<std::uint32_t> representatives;  // masks, ascending
};
HaarClasses haar_classes(const GroupTable& h);
ElementSet subset_from_mask(const GroupTable& h, std::uint32_t mask);

/// Calls `emit` once per representative (or per subset without dedupe), in
/// increasing mask order. Throws CapExceeded above `max_order`.
void enumerate_haar(const GroupTable& h, const EnumerateOptions& opts,
                    const std::function<void(const EnumeratedHaar&)>& emit);
std::vector<EnumeratedHaar> enumerate_haar(const GroupTable& h, const EnumerateOptions& opts = {});

// ---------------------------------------------------------------------------
// Inner abelian groups

/// Small groups built from the family constructors, each with its spec.
struct CatalogGroup {
  FamilySpec spec;
  std::string name;
  std::size_t order;
};
std::vector<CatalogGroup> group_catalog(std::size_t max_order);

/// True iff h is isomorphic to Q8, some M_p(m,n), some M_p(m,n,1) or some
/// Miller-Moreno group of the same order.
bool in_redei_miller_moreno_list(const GroupTable& h);

struct InnerAbelianEntry {
  std::string name;
  std::size_t order;
  bool inner_abelian;
  bool listed;
};
/// Every catalog group up to `max_order` with both predicates evaluated.
std::vector<InnerAbelianEntry> inner_abelian_scan(std::size_t max_order);

// ---------------------------------------------------------------------------
// Reproduction cases

enum class CaseKind { Haar, Enumerate, Obstruction };

struct CaseSpec {
  std::string id;
  CaseKind kind = CaseKind::Haar;
  FamilySpec group;
  /// Haar: S. Obstruction: S-bar over the quotient (or over `quotient_model`).
  std::string set;
  /// Obstruction: generators of N.
  std::string normal;
  /// Obstruction: S-bar is written in this group and carried over to H/N by
  /// an isomorphism.
  std::optional<FamilySpec> quotient_model;
  bool connected_only = false;
  /// "NonCayley", "Cayley", "all-Cayley" or "obstructed".
  std::string expected;
  std::string claim;
};

const std::vector<CaseSpec>& case_catalog();
/// Throws PreconditionError listing the valid ids.
const CaseSpec& find_case(const std::string& id);

struct ReproduceOptions {
  StatusOptions status;
  ObstructionOptions obstruction;
  unsigned threads = 1;
};

struct CaseReport {
  std::string case_id;
  std::string verdict;
  std::string expected;
  bool pass = false;
  Json certificate;
  std::uint64_t nodes = 0;
  double millis = 0;
};

CaseReport reproduce(const CaseSpec& c, const ReproduceOptions& opts = {});
CaseReport reproduce(const std::string& id, const ReproduceOptions& opts = {});
/// Runs the given cases (all by default) on a pool of `opts.threads`
/// workers; the result is ordered by case id.
std::vector<CaseReport> reproduce_all(const ReproduceOptions& opts = {}, const std::vector<CaseSpec>* cases = nullptr);

/// One JSONL line: {case_id, verdict, expected, pass, certificate,
/// nodes_explored, millis}.
Json report_to_json(const CaseReport& r);

}  // namespace haarcay
