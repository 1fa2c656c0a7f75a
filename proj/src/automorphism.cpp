#include "haarcay/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "haarcay/error.hpp"
#include "refine.hpp"

namespace haarcay {

using detail::Partition;
using detail::Refiner;

Coloring equitable_coloring(const Graph& g) {
  Refiner r(g);
  Partition p = Partition::unit(g.n());
  if (g.n()) r.refine(p, {0});
  Coloring c;
  c.color.assign(g.n(), 0);
  for (std::uint32_t s = 0; s < p.size(); s = p.end[s]) {
    std::vector<Vertex> cls = p.cell_vertices(s);
    for (Vertex v : cls) c.color[v] = static_cast<std::uint32_t>(c.classes.size());
    c.classes.push_back(std::move(cls));
  }
  return c;
}

bool is_equitable(const Graph& g, const Coloring& c) {
  for (const auto& cls : c.classes) {
    std::vector<std::size_t> ref;
    for (Vertex v : cls) {
      std::vector<std::size_t> cnt(c.classes.size(), 0);
      for (Vertex u : g.neighbours(v)) ++cnt[c.color[u]];
      if (ref.empty()) ref = cnt;
      else if (cnt != ref) return false;
    }
  }
  return true;
}

bool is_graph_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void add(const Perm& g) {
    for (Vertex x = 0; x < parent_.size(); ++x) unite(x, g(x));
  }

private:
  std::vector<Vertex> parent_;
};

class AutSearch {
public:
  AutSearch(const Graph& g, const IROptions& opts) : g_(g), ref_(g), budget_(opts.node_budget), uf_(g.n()) {}

  AutomorphismResult run() {
    const std::size_t n = g_.n();
    if (n == 0) return {PermGroup::trivial(0), 0};
    Partition root = Partition::unit(n);
    ref_.refine(root, {0});
    tick();
    path_.push_back(root);
    while (!path_.back().discrete()) {
      Partition next = path_.back();
      Vertex v = next.cell_vertices(next.target_cell()).front();
      chosen_.push_back(v);
      ref_.individualize(next, v);
      tick();
      path_.push_back(std::move(next));
    }
    leaf_ = path_.back().elems;

    for (std::size_t level = chosen_.size(); level-- > 0;) {
      const Partition& node = path_[level];
      const Vertex v = chosen_[level];
      std::vector<Vertex> tried{v};
      for (Vertex w : node.cell_vertices(node.target_cell())) {
        if (w == v) continue;
        Vertex rw = uf_.find(w);
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return uf_.find(t) == rw; })) continue;
        tried.push_back(w);
        Partition child = node;
        ref_.individualize(child, w);
        tick();
        if (auto pi = find_equivalent(child, level + 1)) {
          gens_.push_back(*pi);
          uf_.add(*pi);
        }
      }
    }
    return {PermGroup(n, gens_), nodes_};
  }

private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted("automorphism search budget exhausted", nodes_);
  }

  bool matches(const Partition& p, std::size_t depth) const {
    return depth < path_.size() && p.trace == path_[depth].trace && p.cells == path_[depth].cells;
  }

  std::optional<Perm> find_equivalent(const Partition& p, std::size_t depth) {
    if (!matches(p, depth)) return std::nullopt;
    if (p.discrete()) {
      std::vector<Point> img(g_.n());
      for (std::size_t i = 0; i < leaf_.size(); ++i) img[leaf_[i]] = p.elems[i];
      if (!detail::preserves_edges(ref_.adjacency(), g_, img)) return std::nullopt;
      return Perm(std::move(img));
    }
    for (Vertex u : p.cell_vertices(p.target_cell())) {
      Partition child = p;
      ref_.individualize(child, u);
      tick();
      if (auto pi = find_equivalent(child, depth + 1)) return pi;
    }
    return std::nullopt;
  }

  const Graph& g_;
  Refiner ref_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Partition> path_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> leaf_;
  std::vector<Perm> gens_;
  UnionFind uf_;
};

/// Canonical labelling: the leaf maximising (trace sequence, relabelled
/// adjacency), with children pruned by orbits of the stabiliser of the
/// individualised sequence in the known automorphism group.
class CanonSearch {
public:
  CanonSearch(const Graph& g, const PermGroup& aut, const IROptions& opts, std::uint64_t used)
      : g_(g), ref_(g), aut_(aut), budget_(opts.node_budget), nodes_(used) {}

  CanonicalForm run() {
    const std::size_t n = g_.n();
    if (n == 0) return {{}, Graph(0)};
    Partition root = Partition::unit(n);
    ref_.refine(root, {0});
    std::vector<std::uint64_t> traces{root.trace};
    search(root, traces, aut_);
    std::vector<Vertex> lab(n);
    for (std::size_t i = 0; i < n; ++i) lab[best_leaf_[i]] = static_cast<Vertex>(i);
    return {lab, relabel(g_, lab)};
  }

private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted("canonical labelling budget exhausted", nodes_);
  }

  std::vector<Bitset> relabelled_rows(const std::vector<Vertex>& elems) const {
    const std::size_t n = elems.size();
    std::vector<Bitset> rows(n, Bitset(n));
    std::vector<Vertex> lab(n);
    for (std::size_t i = 0; i < n; ++i) lab[elems[i]] = static_cast<Vertex>(i);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : ref_.adjacency()[u]) rows[lab[u]].set(lab[v]);
    return rows;
  }

  void search(const Partition& p, std::vector<std::uint64_t>& traces, const PermGroup& stab) {
    tick();
    if (have_best_) {
      const std::size_t k = std::min(traces.size(), best_traces_.size());
      auto c = std::lexicographical_compare_three_way(traces.begin(), traces.begin() + k, best_traces_.begin(),
                                                      best_traces_.begin() + k);
      if (c < 0) return;
      if (c == 0 && p.discrete() && traces.size() == best_traces_.size()) {
        auto rows = relabelled_rows(p.elems);
        if (rows > best_rows_) {
          best_rows_ = std::move(rows);
          best_leaf_ = p.elems;
        }
        return;
      }
      if (c > 0) have_best_ = false;  // this branch dominates; replace at the leaf
    }
    if (p.discrete()) {
      if (!have_best_) {
        have_best_ = true;
        best_traces_ = traces;
        best_rows_ = relabelled_rows(p.elems);
        best_leaf_ = p.elems;
      }
      return;
    }
    std::vector<std::uint32_t> orbit_id(g_.n());
    auto orbs = stab.orbits();
    for (std::uint32_t i = 0; i < orbs.size(); ++i)
      for (Point x : orbs[i]) orbit_id[x] = i;
    std::vector<bool> done(orbs.size(), false);
    for (Vertex w : p.cell_vertices(p.target_cell())) {
      if (done[orbit_id[w]]) continue;
      done[orbit_id[w]] = true;
      Partition child = p;
      ref_.individualize(child, w);
      traces.push_back(child.trace);
      PermGroup child_stab = stab.generators().empty() ? stab : stab.stabilizer(w);
      search(child, traces, child_stab);
      traces.pop_back();
    }
  }

  const Graph& g_;
  Refiner ref_;
  const PermGroup& aut_;
  std::uint64_t budget_;
  std::uint64_t nodes_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_traces_;
  std::vector<Bitset> best_rows_;
  std::vector<Vertex> best_leaf_;
};

}  // namespace

AutomorphismResult automorphism_group(const Graph& g, const IROptions& opts) {
  AutSearch s(g, opts);
  auto r = s.run();
  for (const auto& p : r.group.generators()) check(is_graph_automorphism(g, p), "IR generator is not an automorphism");
  return r;
}

TransitivityResult vertex_transitivity(const Graph& g, const IROptions& opts) {
  auto r = automorphism_group(g, opts);
  TransitivityResult t;
  t.orbits = r.group.orbits();
  t.transitive = t.orbits.size() <= 1;
  t.nodes = r.nodes;
  return t;
}

CanonicalForm canonical_form(const Graph& g, const IROptions& opts) {
  auto aut = automorphism_group(g, opts);
  CanonSearch s(g, aut.group, opts, aut.nodes);
  return s.run();
}

std::optional<std::vector<Vertex>> find_graph_isomorphism(const Graph& g1, const Graph& g2, const IROptions& opts) {
  if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  std::vector<std::size_t> d1, d2;
  for (Vertex v = 0; v < g1.n(); ++v) {
    d1.push_back(g1.degree(v));
    d2.push_back(g2.degree(v));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  auto c1 = canonical_form(g1, opts);
  auto c2 = canonical_form(g2, opts);
  if (!(c1.graph == c2.graph)) return std::nullopt;
  std::vector<Vertex> inv2(g2.n());
  for (Vertex v = 0; v < g2.n(); ++v) inv2[c2.labeling[v]] = v;
  std::vector<Vertex> map(g1.n());
  for (Vertex v = 0; v < g1.n(); ++v) map[v] = inv2[c1.labeling[v]];
  for (auto [u, v] : g1.edges()) check(g2.adjacent(map[u], map[v]), "isomorphism failed verification");
  return map;
}

}  // namespace haarcay
