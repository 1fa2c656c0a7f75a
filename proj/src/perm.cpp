#include "haarcay/perm.hpp"

#include <algorithm>
#include <numeric>

#include "haarcay/error.hpp"

namespace haarcay {

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), Point{0}); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || hit[x]) throw PreconditionError("image table is not a permutation");
    hit[x] = true;
  }
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.img_.resize(a.img_.size());
  for (std::size_t x = 0; x < a.img_.size(); ++x) r.img_[x] = b.img_[a.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<Point>(x);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm r(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Point Perm::first_moved() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return static_cast<Point>(x);
  return static_cast<Point>(img_.size());
}

bool Perm::has_fixed_point() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] == x) return true;
  return false;
}

std::vector<std::size_t> Perm::cycle_lengths() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::size_t Perm::order() const {
  std::size_t o = 1;
  for (std::size_t len : cycle_lengths()) o = std::lcm(o, len);
  return o;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
  return static_cast<std::size_t>(h);
}

// --- Schreier-Sims -------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens, std::vector<Point> base_prefix)
    : degree_(degree) {
  for (auto& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  for (Point b : base_prefix)
    if (b >= degree) throw PreconditionError("base point out of range");
  schreier_sims(std::move(base_prefix));
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit.assign(1, lv.point);
  lv.slot.assign(degree_, -1);
  lv.slot[lv.point] = 0;
  lv.u.assign(1, Perm(degree_));
  lv.u_inv.assign(1, Perm(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point gamma = lv.orbit[k];
    for (const auto& s : lv.gens) {
      Point delta = s(gamma);
      if (lv.slot[delta] >= 0) continue;
      lv.slot[delta] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(delta);
      Perm u = lv.u[k] * s;
      lv.u_inv.push_back(u.inverse());
      lv.u.push_back(std::move(u));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    Point beta = g(levels_[i].point);
    std::int32_t s = levels_[i].slot[beta];
    if (s < 0) return {std::move(g), i};
    g = g * levels_[i].u_inv[static_cast<std::size_t>(s)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(std::vector<Point> base_prefix) {
  base_ = std::move(base_prefix);
  // Drop duplicate prefix points.
  {
    std::vector<Point> uniq;
    for (Point b : base_)
      if (std::find(uniq.begin(), uniq.end(), b) == uniq.end()) uniq.push_back(b);
    base_ = std::move(uniq);
  }
  auto fixes_base = [&](const Perm& g) {
    return std::all_of(base_.begin(), base_.end(), [&](Point b) { return g(b) == b; });
  };
  while (true) {
    Point next = static_cast<Point>(degree_);
    for (const auto& g : gens_)
      if (fixes_base(g)) next = std::min(next, g.first_moved());
    if (next == degree_) break;
    base_.push_back(next);
  }

  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].point = base_[i];
    for (const auto& g : gens_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(base_[j]) == base_[j];
      if (fixes) levels_[i].gens.push_back(g);
    }
    rebuild_level(i);
  }

  // Work from the deepest level up. Whenever a Schreier generator fails to
  // sift, add the residue and restart at the level where it stopped.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t lvl = i - 1;
    bool restarted = false;
    Level& lv = levels_[lvl];
    for (std::size_t k = 0; !restarted && k < lv.orbit.size(); ++k) {
      for (std::size_t si = 0; !restarted && si < lv.gens.size(); ++si) {
        const Perm& s = lv.gens[si];
        Point img = s(lv.orbit[k]);
        Perm schreier = lv.u[k] * s * lv.u_inv[static_cast<std::size_t>(lv.slot[img])];
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), lvl + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) {
          Level nl;
          nl.point = h.first_moved();
          base_.push_back(nl.point);
          levels_.push_back(std::move(nl));
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_level(l);
        }
        i = j + 1;
        restarted = true;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

const Perm& PermGroup::transversal(std::size_t level, Point p) const {
  std::int32_t s = levels_[level].slot[p];
  if (s < 0) throw PreconditionError("point not in fundamental orbit");
  return levels_[level].u[static_cast<std::size_t>(s)];
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (Point x = 0; x < degree; ++x) {
      Point a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Point>> out;
  std::vector<std::int32_t> idx(degree, -1);
  for (Point x = 0; x < degree; ++x) {
    Point r = find(x);
    if (idx[r] < 0) {
      idx[r] = static_cast<std::int32_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(idx[r])].push_back(x);
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return orbits_of(degree_, gens_); }

std::vector<Point> PermGroup::orbit(Point v) const {
  std::vector<Point> out{v};
  std::vector<bool> seen(degree_, false);
  seen[v] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      Point w = g(out[k]);
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

bool PermGroup::is_semiregular() const {
  // Semiregular iff |G| equals every orbit length.
  for (const auto& o : orbits())
    if (BigInt(o.size()) != order_) return false;
  return true;
}

bool PermGroup::is_regular() const { return is_transitive() && order_ == BigInt(degree_); }

PermGroup PermGroup::stabilizer(Point v) const {
  if (v >= degree_) throw PreconditionError("stabilizer point out of range");
  PermGroup rebased(degree_, gens_, {v});
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < rebased.levels_.size(); ++i)
    for (const auto& g : rebased.levels_[i].gens)
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  std::vector<Point> rest(rebased.base_.begin() + (rebased.base_.empty() ? 0 : 1), rebased.base_.end());
  PermGroup out(degree_, std::move(gens), std::move(rest));
  check(out.order_ * rebased.levels_[0].orbit.size() == order_, "orbit-stabilizer mismatch");
  return out;
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& f) const {
  const std::size_t k = levels_.size();
  if (k == 0) {
    f(Perm(degree_));
    return;
  }
  // g = t_{k-1} * ... * t_0; choose from the deepest level outward.
  std::vector<std::size_t> choice(k, 0);
  std::vector<Perm> partial(k + 1);
  partial[k] = Perm(degree_);
  std::size_t depth = k;  // partial[d] = t_{k-1} * ... * t_d
  while (true) {
    while (depth > 0) {
      --depth;
      partial[depth] = partial[depth + 1] * levels_[depth].u[choice[depth]];
    }
    if (!f(partial[0])) return;
    // advance odometer starting at level 0
    std::size_t d = 0;
    while (d < k && ++choice[d] == levels_[d].orbit.size()) choice[d++] = 0;
    if (d == k) return;
    depth = d;
    partial[depth] = partial[depth + 1] * levels_[depth].u[choice[depth]];
  }
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order_ > BigInt(cap)) throw CapExceeded("group order " + order_.str() + " exceeds element cap");
  std::vector<Perm> out;
  for_each_element([&](const Perm& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// --- setwise stabilizer --------------------------------------------------

namespace {

class SetwiseSearch {
public:
  SetwiseSearch(const PermGroup& g, const Bitset& b, std::uint64_t budget, SearchStats* stats)
      : b_(b), budget_(budget), stats_(stats) {
    std::vector<Point> prefix;
    b.for_each([&](std::size_t x) { prefix.push_back(static_cast<Point>(x)); });
    g_ = PermGroup(g.degree(), g.generators(), prefix);
    depth_ = 0;
    while (depth_ < g_.levels() && b_.test(g_.base()[depth_])) ++depth_;
    // Pointwise stabilizer of B lies in the result.
    for (std::size_t l = depth_; l < g_.levels(); ++l)
      for (const auto& s : g_.level_generators(l)) found_.push_back(s);
    k_ = PermGroup(g_.degree(), found_, g_.base());
  }

  PermGroup run() {
    Perm id(g_.degree());
    search(0, id, true);
    return k_;
  }

private:
  // phi = t_{level-1} * ... * t_0. Off the identity path one element per
  // subtree suffices: the rest of its coset is already in K.
  bool search(std::size_t level, const Perm& phi, bool on_identity_path) {
    if (++nodes_ > budget_) throw BudgetExhausted("setwise stabilizer budget exhausted", nodes_);
    if (stats_) stats_->nodes = nodes_;
    if (level == depth_) {
      if (!k_.contains(phi)) {
        found_.push_back(phi);
        k_ = PermGroup(g_.degree(), found_, g_.base());
      }
      return true;
    }
    std::vector<Point> tried;
    for (Point gamma : g_.fundamental_orbit(level)) {
      Perm next = g_.transversal(level, gamma) * phi;
      if (!b_.test(next(g_.base()[level]))) continue;
      if (!on_identity_path) {
        if (search(level + 1, next, false)) return true;
        continue;
      }
      if (std::any_of(tried.begin(), tried.end(), [&](Point p) { return same_k_orbit(level, p, gamma); }))
        continue;
      tried.push_back(gamma);
      search(level + 1, next, gamma == g_.base()[level]);
    }
    return on_identity_path;
  }

  bool same_k_orbit(std::size_t level, Point a, Point b) const {
    if (level >= k_.levels()) return a == b;
    const auto& gens = k_.level_generators(level);
    std::vector<Point> stack{a};
    std::vector<bool> seen(k_.degree(), false);
    seen[a] = true;
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      if (x == b) return true;
      for (const auto& s : gens) {
        Point y = s(x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  PermGroup g_;
  PermGroup k_;
  std::vector<Perm> found_;
  Bitset b_;
  std::size_t depth_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  SearchStats* stats_;
};

}  // namespace

PermGroup setwise_stabilizer(const PermGroup& g, const Bitset& b, std::uint64_t budget, SearchStats* stats) {
  if (b.size() != g.degree()) throw PreconditionError("point set has wrong universe");
  SetwiseSearch s(g, b, budget, stats);
  return s.run();
}

}  // namespace haarcay
