#include "haarcay/cayley.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "haarcay/error.hpp"

namespace haarcay {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Cayley: return "Cayley";
    case Verdict::NonCayley: return "NonCayley";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

struct BudgetHit {};

/// A semiregular subgroup held as its elements, indexed by the image of 0.
struct Semiregular {
  std::vector<Perm> gens;
  std::vector<std::int32_t> slot;  // image of 0 -> index into elems
  std::vector<Perm> elems;
  std::vector<std::uint32_t> orbit_id;
};

class RegularSearch {
public:
  RegularSearch(const PermGroup& a, std::uint64_t budget)
      : a_(a.base().empty() || a.base().front() == 0 ? a : PermGroup(a.degree(), a.generators(), {0})),
        n_(a.degree()),
        budget_(budget) {}

  RegularSearchResult run() {
    RegularSearchResult r;
    if (!a_.is_transitive()) return r;
    if (n_ <= 1) {
      r.outcome = SearchOutcome::Found;
      return r;
    }
    check(a_.base().front() == 0, "transitive group base must start at 0");
    Semiregular k = trivial();
    try {
      if (extend(k)) {
        r.outcome = SearchOutcome::Found;
        r.generators = result_;
      } else {
        r.outcome = SearchOutcome::None;
      }
    } catch (const BudgetHit&) {
      r.outcome = SearchOutcome::Exhausted;
    }
    r.nodes = nodes_;
    return r;
  }

private:
  void tick(std::uint64_t k = 1) {
    nodes_ += k;
    if (nodes_ > budget_) throw BudgetHit{};
  }

  Semiregular trivial() const {
    Semiregular k;
    k.slot.assign(n_, -1);
    k.slot[0] = 0;
    k.elems.push_back(Perm(n_));
    k.orbit_id.resize(n_);
    for (std::uint32_t x = 0; x < n_; ++x) k.orbit_id[x] = x;
    return k;
  }

  /// <K, g> if it is semiregular, else nullopt.
  std::optional<Semiregular> close(const Semiregular& k, const Perm& g) {
    Semiregular r = k;
    r.gens.push_back(g);
    for (std::size_t i = 0; i < r.elems.size(); ++i) {
      for (const auto& s : r.gens) {
        tick();
        Perm p = r.elems[i] * s;
        Point img = p(0);
        if (r.slot[img] >= 0) {
          if (!(r.elems[static_cast<std::size_t>(r.slot[img])] == p)) return std::nullopt;
          continue;
        }
        if (p.has_fixed_point()) return std::nullopt;
        r.slot[img] = static_cast<std::int32_t>(r.elems.size());
        r.elems.push_back(std::move(p));
      }
    }
    if (n_ % r.elems.size() != 0) return std::nullopt;
    // orbit of x under a semiregular group: {e(x)}; label by its minimum
    for (Point x = 0; x < n_; ++x) {
      Point m = x;
      for (const auto& e : r.elems) m = std::min(m, e(x));
      r.orbit_id[x] = m;
    }
    tick(r.elems.size());
    return r;
  }

  static std::pair<std::uint64_t, std::uint64_t> key(const Semiregular& k) {
    std::vector<const Perm*> sorted;
    for (const auto& e : k.elems) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const Perm* a, const Perm* b) { return a->images() < b->images(); });
    std::uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x84222325cbf29ce4ULL;
    for (const Perm* p : sorted)
      for (Point x : p->images()) {
        h1 = (h1 ^ x) * 0x100000001b3ULL;
        h2 = (h2 + x + 1) * 0x9e3779b97f4a7c15ULL;
      }
    return {h1, h2};
  }

  bool extend(const Semiregular& k) {
    tick();
    if (k.elems.size() == n_) {
      result_ = k.gens;
      return true;
    }
    if (!visited_.insert(key(k)).second) return false;
    Point v = 0;
    while (k.slot[v] >= 0) ++v;
    // Candidates g with g(0) = v: g = t_{L-1} * ... * t_1 * u_v. Each base
    // point's image must leave its K-orbit, otherwise some element of the
    // coset Kg fixes it.
    const Perm& uv = a_.transversal(0, v);
    bool found = false;
    std::function<void(std::size_t, const Perm&)> walk = [&](std::size_t level, const Perm& phi) {
      if (found) return;
      tick();
      if (level == a_.levels()) {
        for (Point x = 0; x < n_; ++x)
          if (k.orbit_id[phi(x)] == k.orbit_id[x]) return;
        auto next = close(k, phi);
        if (next && extend(*next)) found = true;
        return;
      }
      const Point b = a_.base()[level];
      for (Point gamma : a_.fundamental_orbit(level)) {
        Perm nphi = a_.transversal(level, gamma) * phi;
        if (k.orbit_id[nphi(b)] == k.orbit_id[b]) continue;
        walk(level + 1, nphi);
        if (found) return;
      }
    };
    if (k.orbit_id[v] == k.orbit_id[0]) return false;
    walk(1, uv);
    return found;
  }

  PermGroup a_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> visited_;
  std::vector<Perm> result_;
};

}  // namespace

RegularSearchResult regular_subgroup_search(const PermGroup& a, const RegularSearchOptions& opts) {
  RegularSearch s(a, opts.budget);
  auto r = s.run();
  if (r.outcome == SearchOutcome::Found) {
    PermGroup g(a.degree(), r.generators);
    check(g.is_regular(), "regular subgroup search returned a non-regular group");
    for (const auto& p : r.generators) check(a.contains(p), "regular subgroup generator outside the group");
  }
  return r;
}

Certificate cayley_status(const Graph& g, const StatusHints& hints, const StatusOptions& opts) {
  Certificate c;
  AutomorphismResult aut;
  try {
    aut = automorphism_group(g, opts.ir);
  } catch (const BudgetExhausted& e) {
    c.verdict = Verdict::Unknown;
    c.method = "budget";
    c.nodes = e.nodes();
    c.budget_report = e.what();
    return c;
  }
  c.nodes = aut.nodes;
  c.aut_order = aut.group.order_string();
  auto orbits = aut.group.orbits();
  if (orbits.size() > 1) {
    c.verdict = Verdict::NonCayley;
    c.method = "intransitive";
    c.orbits = std::move(orbits);
    return c;
  }
  if (g.n() <= 1) {
    c.verdict = Verdict::Cayley;
    c.method = "regular-subgroup";
    return c;
  }

  if (hints.cayley && hints.cayley->group && hints.cayley->group->order() == g.n()) {
    const GroupTable& h = *hints.cayley->group;
    std::vector<Perm> gens;
    for (Element x : generating_sequence(h)) {
      std::vector<Point> img(h.order());
      for (Element e = 0; e < h.order(); ++e) img[e] = h.mul(e, x);
      gens.emplace_back(std::move(img));
    }
    if (std::all_of(gens.begin(), gens.end(), [&](const Perm& p) { return is_graph_automorphism(g, p); })) {
      c.verdict = Verdict::Cayley;
      c.method = "cayley-provenance";
      c.regular_generators = std::move(gens);
      return c;
    }
  }

  if (hints.haar && hints.haar->group && 2 * hints.haar->group->order() == g.n()) {
    const GroupTable& h = *hints.haar->group;
    if (haar_graph(h, hints.haar->s).graph == g) {
      std::vector<GroupAutomorphism> auts = automorphism_group_of_group(h);
      if (auto d = cayley_certificate_via_delta(h, hints.haar->s, &auts)) {
        c.verdict = Verdict::Cayley;
        c.method = "delta";
        c.regular_generators = d->group.generators();
        c.delta = DeltaWitness{d->delta.alpha.images, d->delta.x, d->delta.y};
        return c;
      }
      auto ns = normalizer_structure(h, hints.haar->s, &auts);
      if (ns.group.is_transitive()) {
        auto r = regular_subgroup_search(ns.group, opts.regular);
        c.nodes += r.nodes;
        if (r.outcome == SearchOutcome::Found) {
          c.verdict = Verdict::Cayley;
          c.method = "regular-subgroup";
          c.regular_generators = std::move(r.generators);
          return c;
        }
      }
    }
  }

  auto r = regular_subgroup_search(aut.group, opts.regular);
  c.nodes += r.nodes;
  switch (r.outcome) {
    case SearchOutcome::Found:
      c.verdict = Verdict::Cayley;
      c.method = "regular-subgroup";
      c.regular_generators = std::move(r.generators);
      break;
    case SearchOutcome::None:
      c.verdict = Verdict::NonCayley;
      c.method = "exhausted";
      break;
    case SearchOutcome::Exhausted:
      c.verdict = Verdict::Unknown;
      c.method = "budget";
      c.budget_report = "regular subgroup search stopped after " + std::to_string(r.nodes) + " steps";
      break;
  }
  return c;
}

bool verify_certificate(const Graph& g, const Certificate& c) {
  switch (c.verdict) {
    case Verdict::Cayley: {
      for (const auto& p : c.regular_generators)
        if (!is_graph_automorphism(g, p)) return false;
      if (g.n() <= 1) return true;
      return PermGroup(g.n(), c.regular_generators).is_regular();
    }
    case Verdict::NonCayley: {
      auto fresh = automorphism_group(g);
      if (c.method == "intransitive") return c.orbits.size() > 1 && fresh.group.orbits() == c.orbits;
      return fresh.group.is_transitive() &&
             regular_subgroup_search(fresh.group).outcome == SearchOutcome::None;
    }
    case Verdict::Unknown: return false;
  }
  return false;
}

}  // namespace haarcay
