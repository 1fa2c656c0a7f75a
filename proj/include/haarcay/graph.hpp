#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "haarcay/bitset.hpp"
#include "haarcay/group.hpp"

namespace haarcay {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 4096;

/// Simple undirected graph stored as adjacency bit-rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t n() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  /// Edges (u,v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<Vertex> neighbours(Vertex v) const;

  /// Adds {u,v}; loops are rejected.
  void add_edge(Vertex u, Vertex v);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

/// Parts of a bi-Cayley graph over a group of order `order`:
/// h_0 is vertex h, h_1 is vertex order + h.
struct BipartiteLabeling {
  std::size_t order = 0;

  int part(Vertex v) const { return v < order ? 0 : 1; }
  Element element(Vertex v) const { return static_cast<Element>(v < order ? v : v - order); }
  Vertex vertex(Element h, int part) const { return static_cast<Vertex>(part ? order + h : h); }
};

struct BiCayleyGraph {
  Graph graph;
  BipartiteLabeling labeling;
};

/// Cay(H,R): edges {h, xh} for x in R.
Graph cayley_graph(const GroupTable& h, const ElementSet& r);

/// BiCay(H,R,L,S): {h_0,(xh)_0} for x in R, {h_1,(yh)_1} for y in L,
/// {h_0,(sh)_1} for s in S.
BiCayleyGraph bicayley_graph(const GroupTable& h, const ElementSet& r, const ElementSet& l,
                             const ElementSet& s);

/// H(H,S) = BiCay(H, {}, {}, S).
BiCayleyGraph haar_graph(const GroupTable& h, const ElementSet& s);

/// G1[G2]: vertex (u1,u2) is u1 * |V2| + u2.
Graph lex_product(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);
/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Relabels v to perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph petersen_graph();

/// "n m" header followed by one "u v" line per edge (u < v, ascending).
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace haarcay
