#include "refine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace haarcay::detail {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the combined word
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Partition Partition::unit(std::size_t n) {
  Partition p;
  p.elems.resize(n);
  std::iota(p.elems.begin(), p.elems.end(), Vertex{0});
  p.pos.resize(n);
  std::iota(p.pos.begin(), p.pos.end(), std::uint32_t{0});
  p.cell.assign(n, 0);
  p.end.assign(n, 0);
  if (n) p.end[0] = static_cast<std::uint32_t>(n);
  p.cells = n ? 1 : 0;
  return p;
}

std::uint32_t Partition::target_cell() const {
  std::uint32_t best = static_cast<std::uint32_t>(size());
  std::uint32_t best_size = static_cast<std::uint32_t>(size()) + 1;
  for (std::uint32_t s = 0; s < size(); s = end[s]) {
    std::uint32_t sz = end[s] - s;
    if (sz > 1 && sz < best_size) {
      best = s;
      best_size = sz;
    }
  }
  return best;
}

std::vector<Vertex> Partition::cell_vertices(std::uint32_t start) const {
  std::vector<Vertex> out(elems.begin() + start, elems.begin() + end[start]);
  std::sort(out.begin(), out.end());
  return out;
}

Refiner::Refiner(const Graph& g) : adj_(g.n()), count_(g.n(), 0), queued_(g.n(), 0) {
  for (Vertex v = 0; v < g.n(); ++v) adj_[v] = g.neighbours(v);
}

void Refiner::refine(Partition& p, const std::vector<std::uint32_t>& splitters) {
  std::deque<std::uint32_t> queue;
  for (auto s : splitters) {
    if (!queued_[s]) {
      queued_[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<Vertex> touched;
  std::vector<std::uint32_t> cells;
  std::vector<std::pair<std::uint32_t, Vertex>> scratch;
  while (!queue.empty()) {
    const std::uint32_t w = queue.front();
    queue.pop_front();
    queued_[w] = 0;
    p.trace = mix(p.trace, (std::uint64_t{w} << 32) | p.end[w]);

    touched.clear();
    for (std::uint32_t i = w; i < p.end[w]; ++i)
      for (Vertex u : adj_[p.elems[i]])
        if (count_[u]++ == 0) touched.push_back(u);
    cells.clear();
    for (Vertex u : touched) cells.push_back(p.cell[u]);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    for (std::uint32_t c : cells) {
      const std::uint32_t e = p.end[c];
      scratch.clear();
      for (std::uint32_t i = c; i < e; ++i) scratch.emplace_back(count_[p.elems[i]], p.elems[i]);
      std::sort(scratch.begin(), scratch.end());
      // fragment boundaries
      std::vector<std::uint32_t> starts{c};
      for (std::uint32_t i = 1; i < scratch.size(); ++i)
        if (scratch[i].first != scratch[i - 1].first) starts.push_back(c + i);
      for (std::size_t f = 0; f < starts.size(); ++f) {
        std::uint32_t fe = f + 1 < starts.size() ? starts[f + 1] : e;
        p.trace = mix(p.trace, (std::uint64_t{c} << 40) ^ (std::uint64_t{scratch[starts[f] - c].first} << 20) ^
                                   (fe - starts[f]));
      }
      if (starts.size() == 1) continue;
      for (std::uint32_t i = c; i < e; ++i) {
        p.elems[i] = scratch[i - c].second;
        p.pos[p.elems[i]] = i;
      }
      std::size_t largest = 0;
      for (std::size_t f = 0; f < starts.size(); ++f) {
        std::uint32_t fs = starts[f];
        std::uint32_t fe = f + 1 < starts.size() ? starts[f + 1] : e;
        p.end[fs] = fe;
        for (std::uint32_t i = fs; i < fe; ++i) p.cell[p.elems[i]] = fs;
        std::uint32_t best_fe = largest + 1 < starts.size() ? starts[largest + 1] : e;
        if (fe - fs > best_fe - starts[largest]) largest = f;
      }
      p.cells += static_cast<std::uint32_t>(starts.size() - 1);
      const bool was_queued = queued_[c];
      for (std::size_t f = 0; f < starts.size(); ++f) {
        std::uint32_t fs = starts[f];
        if (queued_[fs]) continue;
        if (!was_queued && f == largest) continue;
        queued_[fs] = 1;
        queue.push_back(fs);
      }
    }
    for (Vertex u : touched) count_[u] = 0;
  }
  p.trace = mix(p.trace, p.cells);
}

void Refiner::individualize(Partition& p, Vertex v) {
  const std::uint32_t c = p.cell[v];
  const std::uint32_t e = p.end[c];
  p.trace = mix(p.trace, 0xA5A5000000000000ULL | c);
  if (e - c == 1) return;
  std::uint32_t at = p.pos[v];
  std::swap(p.elems[c], p.elems[at]);
  p.pos[p.elems[at]] = at;
  p.pos[v] = c;
  p.end[c] = c + 1;
  p.end[c + 1] = e;
  for (std::uint32_t i = c + 1; i < e; ++i) p.cell[p.elems[i]] = c + 1;
  ++p.cells;
  refine(p, {c});
}

bool preserves_edges(const std::vector<std::vector<Vertex>>& adj, const Graph& g,
                     const std::vector<Vertex>& perm) {
  for (Vertex u = 0; u < adj.size(); ++u)
    for (Vertex v : adj[u])
      if (v > u && !g.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace haarcay::detail
