#pragma once

// Ordered partitions and equitable refinement for the search tree.

#include <cstdint>
#include <vector>

#include "haarcay/graph.hpp"

namespace haarcay::detail {

/// Ordered partition of 0..n-1. A cell is identified by its start position
/// in `elems`; `end[start]` is one past its last position.
struct Partition {
  std::vector<Vertex> elems;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;
  std::vector<std::uint32_t> end;
  std::uint32_t cells = 0;
  /// Running invariant of every refinement step that produced this node.
  std::uint64_t trace = 0;

  static Partition unit(std::size_t n);
  std::size_t size() const { return elems.size(); }
  bool discrete() const { return cells == elems.size(); }
  std::uint32_t cell_size(std::uint32_t start) const { return end[start] - start; }
  /// Start of the first smallest non-singleton cell.
  std::uint32_t target_cell() const;
  /// Vertices of the cell starting at `start`, ascending by vertex index.
  std::vector<Vertex> cell_vertices(std::uint32_t start) const;
};

class Refiner {
public:
  explicit Refiner(const Graph& g);

  /// Refines to the coarsest equitable partition finer than `p`, using the
  /// given cells as initial splitters.
  void refine(Partition& p, const std::vector<std::uint32_t>& splitters);
  /// Splits v off its cell (as the first position) and refines.
  void individualize(Partition& p, Vertex v);

  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint32_t> count_;
  std::vector<char> queued_;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v);

/// True iff the map v -> perm[v] preserves adjacency.
bool preserves_edges(const std::vector<std::vector<Vertex>>& adj, const Graph& g,
                     const std::vector<Vertex>& perm);

}  // namespace haarcay::detail
