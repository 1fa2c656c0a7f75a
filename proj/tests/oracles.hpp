// Independent brute-force oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the search code it is used to check.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "haarcay/graph.hpp"
#include "haarcay/group.hpp"
#include "haarcay/perm.hpp"

namespace oracle {

using namespace haarcay;

/// Every vertex permutation preserving adjacency (n <= 8 or so).
inline std::set<std::vector<Vertex>> graph_automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.n());
  std::iota(p.begin(), p.end(), 0u);
  std::set<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.n() && ok; ++u)
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::set<std::vector<Vertex>> group_elements(const PermGroup& g) {
  std::set<std::vector<Vertex>> out;
  for (const auto& p : g.elements()) out.insert(p.images());
  return out;
}

/// Closure of a set of elements under multiplication.
inline std::set<Element> closure(const GroupTable& h, std::set<Element> s) {
  s.insert(kIdentity);
  std::vector<Element> q(s.begin(), s.end());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element z : {h.mul(q[i], q[j]), h.mul(q[j], q[i])})
        if (s.insert(z).second) q.push_back(z);
  return s;
}

/// All subgroups, by growing from the trivial one one element at a time.
inline std::set<std::set<Element>> all_subgroups(const GroupTable& h) {
  std::set<std::set<Element>> seen{{kIdentity}};
  std::vector<std::set<Element>> q{{kIdentity}};
  for (std::size_t i = 0; i < q.size(); ++i)
    for (Element g = 0; g < h.order(); ++g) {
      if (q[i].count(g)) continue;
      auto s = q[i];
      s.insert(g);
      auto k = closure(h, s);
      if (seen.insert(k).second) q.push_back(k);
    }
  return seen;
}

inline bool commutes_on(const GroupTable& h, const std::set<Element>& s) {
  for (Element x : s)
    for (Element y : s)
      if (h.mul(x, y) != h.mul(y, x)) return false;
  return true;
}

/// Non-abelian with every proper subgroup abelian, by full subgroup
/// enumeration.
inline bool inner_abelian(const GroupTable& h) {
  std::set<Element> all;
  for (Element x = 0; x < h.order(); ++x) all.insert(x);
  if (commutes_on(h, all)) return false;
  for (const auto& k : all_subgroups(h))
    if (k.size() < h.order() && !commutes_on(h, k)) return false;
  return true;
}

/// All table automorphisms by trying every permutation fixing 0.
inline std::set<std::vector<Element>> group_automorphisms(const GroupTable& h) {
  std::vector<Element> p(h.order());
  std::iota(p.begin(), p.end(), 0u);
  std::set<std::vector<Element>> out;
  do {
    bool ok = true;
    for (Element x = 0; x < h.order() && ok; ++x)
      for (Element y = 0; y < h.order(); ++y)
        if (p[h.mul(x, y)] != h.mul(p[x], p[y])) {
          ok = false;
          break;
        }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

/// (u v)_h = sum_g u_g v_{g^-1 h}, written exactly as the formula.
inline std::vector<long long> convolution(const GroupTable& h, const std::vector<long long>& u,
                                          const std::vector<long long>& v) {
  std::vector<long long> r(h.order(), 0);
  for (Element x = 0; x < h.order(); ++x)
    for (Element g = 0; g < h.order(); ++g) r[x] += u[g] * v[h.mul(h.inv(g), x)];
  return r;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline bool distinct_neighbourhoods(const Graph& g) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.row(u) == g.row(v)) return false;
  return true;
}

inline unsigned long long factorial(unsigned n) { return n <= 1 ? 1ull : n * factorial(n - 1); }

}  // namespace oracle
