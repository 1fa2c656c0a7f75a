#include "haarcay/graph.hpp"

#include <istream>
#include <algorithm>
#include <ostream>

#include "haarcay/error.hpp"

namespace haarcay {

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices)
    throw CapExceeded("graph on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(kMaxVertices));
  rows_.assign(n, Bitset(n));
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n(); ++u)
    for (std::size_t v = rows_[u].next(u + 1); v < n(); v = rows_[u].next(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  rows_[v].for_each([&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n() || v >= n()) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n()) throw PreconditionError("label count must equal vertex count");
  labels_ = std::move(labels);
}

namespace {

void require_symmetric_without_identity(const GroupTable& h, const ElementSet& x, const char* name) {
  if (x.universe() != h.order()) throw PreconditionError(std::string(name) + " is over a different group");
  if (x.contains(kIdentity)) throw PreconditionError(std::string(name) + " must not contain the identity");
  if (!(inverse_set(h, x) == x)) throw PreconditionError(std::string(name) + " must be inverse-closed");
}

}  // namespace

Graph cayley_graph(const GroupTable& h, const ElementSet& r) {
  require_symmetric_without_identity(h, r, "R");
  Graph g(h.order());
  for (Element x : r.elements())
    for (Element e = 0; e < h.order(); ++e) g.add_edge(e, h.mul(x, e));
  return g;
}

BiCayleyGraph bicayley_graph(const GroupTable& h, const ElementSet& r, const ElementSet& l,
                             const ElementSet& s) {
  require_symmetric_without_identity(h, r, "R");
  require_symmetric_without_identity(h, l, "L");
  if (s.universe() != h.order()) throw PreconditionError("S is over a different group");
  const std::size_t n = h.order();
  BipartiteLabeling lab{n};
  Graph g(2 * n);
  for (Element e = 0; e < n; ++e) {
    for (Element x : r.elements()) g.add_edge(lab.vertex(e, 0), lab.vertex(h.mul(x, e), 0));
    for (Element y : l.elements()) g.add_edge(lab.vertex(e, 1), lab.vertex(h.mul(y, e), 1));
    for (Element x : s.elements()) g.add_edge(lab.vertex(e, 0), lab.vertex(h.mul(x, e), 1));
  }
  std::vector<std::string> labels(2 * n);
  for (Element e = 0; e < n; ++e) {
    labels[e] = std::to_string(e) + "_0";
    labels[n + e] = std::to_string(e) + "_1";
  }
  g.set_labels(std::move(labels));
  return {std::move(g), lab};
}

BiCayleyGraph haar_graph(const GroupTable& h, const ElementSet& s) {
  ElementSet none(h.order());
  return bicayley_graph(h, none, none, s);
}

Graph lex_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.n(), n2 = g2.n();
  Graph g(n1 * n2);
  for (Vertex u1 = 0; u1 < n1; ++u1)
    for (Vertex u2 = 0; u2 < n2; ++u2) {
      Vertex u = static_cast<Vertex>(u1 * n2 + u2);
      for (Vertex v2 : g2.neighbours(u2))
        if (v2 > u2) g.add_edge(u, static_cast<Vertex>(u1 * n2 + v2));
      for (Vertex v1 : g1.neighbours(u1))
        if (v1 > u1)
          for (Vertex v2 = 0; v2 < n2; ++v2) g.add_edge(u, static_cast<Vertex>(v1 * n2 + v2));
    }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.n(), false);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      g.row(comp[i]).for_each([&](std::size_t v) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(static_cast<Vertex>(v));
        }
      });
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.n()) throw PreconditionError("relabelling has wrong length");
  Graph r(g.n());
  for (auto [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  return r;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n >= 3)
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(static_cast<Vertex>(a.n() + u), static_cast<Vertex>(a.n() + v));
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

void write_edge_list(std::ostream& os, const Graph& g) {
  auto es = g.edges();
  os << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw PreconditionError("edge list: missing 'n m' header");
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(is >> u >> v)) throw PreconditionError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw PreconditionError("edge list: vertex out of range");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace haarcay
