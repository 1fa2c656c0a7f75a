#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarcay/graph.hpp"
#include "haarcay/perm.hpp"

namespace haarcay {

struct IROptions {
  /// Search-tree nodes (refinements) before BudgetExhausted is thrown.
  std::uint64_t node_budget = 10'000'000;
};

/// Vertex colouring in canonical class order.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::vector<std::vector<Vertex>> classes;
};

/// Coarsest equitable colouring refining the uniform one.
Coloring equitable_coloring(const Graph& g);
bool is_equitable(const Graph& g, const Coloring& c);

struct AutomorphismResult {
  PermGroup group;
  std::uint64_t nodes = 0;
};

/// Aut(G) by individualization-refinement. Throws BudgetExhausted.
AutomorphismResult automorphism_group(const Graph& g, const IROptions& opts = {});

struct TransitivityResult {
  bool transitive = false;
  std::vector<std::vector<Vertex>> orbits;
  std::uint64_t nodes = 0;
};

TransitivityResult vertex_transitivity(const Graph& g, const IROptions& opts = {});
inline bool is_vertex_transitive(const Graph& g, const IROptions& opts = {}) {
  return vertex_transitivity(g, opts).transitive;
}

struct CanonicalForm {
  /// labeling[v] is the canonical label of vertex v.
  std::vector<Vertex> labeling;
  Graph graph;
};

CanonicalForm canonical_form(const Graph& g, const IROptions& opts = {});

/// An isomorphism g1 -> g2 (verified), if one exists.
std::optional<std::vector<Vertex>> find_graph_isomorphism(const Graph& g1, const Graph& g2,
                                                          const IROptions& opts = {});
inline bool are_isomorphic(const Graph& g1, const Graph& g2, const IROptions& opts = {}) {
  return find_graph_isomorphism(g1, g2, opts).has_value();
}

/// True iff p maps edges to edges.
bool is_graph_automorphism(const Graph& g, const Perm& p);

}  // namespace haarcay
