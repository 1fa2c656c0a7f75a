#include "haarcay/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "haarcay/error.hpp"

namespace haarcay {

GroupTable::GroupTable(std::size_t order, std::vector<Element> mult,
                       std::vector<NamedGenerator> gens, std::string family_tag)
    : order_(order), mult_(std::move(mult)), gens_(std::move(gens)), tag_(std::move(family_tag)) {
  if (order_ == 0) throw PreconditionError("group order must be positive");
  if (order_ > kMaxGroupOrder)
    throw CapExceeded("group order " + std::to_string(order_) + " exceeds cap " +
                      std::to_string(kMaxGroupOrder));
  if (mult_.size() != order_ * order_) throw PreconditionError("multiplication table has wrong size");

  // Latin square + identity at 0.
  std::vector<char> seen(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < order_; ++y) {
      Element z = mult_[x * order_ + y];
      if (z >= order_ || seen[z]) throw PreconditionError("multiplication table is not a Latin square");
      seen[z] = 1;
    }
    if (mult_[x] != x || mult_[x * order_] != x)
      throw PreconditionError("element 0 is not the identity");
  }
  for (std::size_t y = 0; y < order_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < order_; ++x) {
      Element z = mult_[x * order_ + y];
      if (seen[z]) throw PreconditionError("multiplication table is not a Latin square");
      seen[z] = 1;
    }
  }

  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y)
      if (mul(x, y) == kIdentity) {
        inv_[x] = y;
        break;
      }
  for (Element x = 0; x < order_; ++x)
    if (mul(inv_[x], x) != kIdentity) throw PreconditionError("left and right inverses differ");

  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw PreconditionError("multiplication is not associative");
  };
  if (order_ <= 100) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  elem_order_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    std::size_t k = 1;
    for (Element y = x; y != kIdentity; y = mul(y, x)) ++k;
    elem_order_[x] = (x == kIdentity) ? 1 : k;
  }

  for (const auto& g : gens_)
    if (g.element >= order_) throw PreconditionError("generator '" + g.label + "' out of range");
}

Element GroupTable::pow(Element x, long long k) const {
  long long o = static_cast<long long>(elem_order_[x]);
  k %= o;
  if (k < 0) k += o;
  Element r = kIdentity;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::optional<Element> GroupTable::generator(std::string_view label) const {
  for (const auto& g : gens_)
    if (g.label == label) return g.element;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ElementSet::ElementSet(std::size_t order, std::initializer_list<Element> elems) : bits_(order) {
  for (auto e : elems) insert(e);
}

ElementSet ElementSet::from(std::size_t order, const std::vector<Element>& elems) {
  ElementSet s(order);
  for (auto e : elems) {
    if (e >= order) throw PreconditionError("element index out of range");
    s.insert(e);
  }
  return s;
}

ElementSet ElementSet::all(std::size_t order) {
  ElementSet s(order);
  for (Element e = 0; e < order; ++e) s.insert(e);
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

void ElementSet::same_universe(const ElementSet& o) const {
  if (o.universe() != universe()) throw PreconditionError("element sets over different groups");
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  same_universe(o);
  bits_ |= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  same_universe(o);
  bits_ &= o.bits_;
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  same_universe(o);
  return bits_.is_subset_of(o.bits_);
}

namespace {

void require_over(const GroupTable& h, const ElementSet& s) {
  if (s.universe() != h.order()) throw PreconditionError("element set is not over this group");
}

}  // namespace

ElementSet left_translate(const GroupTable& h, Element x, const ElementSet& s) {
  require_over(h, s);
  ElementSet out(h.order());
  for (auto e : s.elements()) out.insert(h.mul(x, e));
  return out;
}

ElementSet right_translate(const GroupTable& h, const ElementSet& s, Element x) {
  require_over(h, s);
  ElementSet out(h.order());
  for (auto e : s.elements()) out.insert(h.mul(e, x));
  return out;
}

ElementSet inverse_set(const GroupTable& h, const ElementSet& s) {
  require_over(h, s);
  ElementSet out(h.order());
  for (auto e : s.elements()) out.insert(h.inv(e));
  return out;
}

// ---------------------------------------------------------------------------

GroupAutomorphism GroupAutomorphism::identity(std::size_t order) {
  GroupAutomorphism a;
  a.images.resize(order);
  std::iota(a.images.begin(), a.images.end(), Element{0});
  return a;
}

GroupAutomorphism GroupAutomorphism::then(const GroupAutomorphism& next) const {
  GroupAutomorphism r;
  r.images.resize(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) r.images[x] = next.images[images[x]];
  return r;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  GroupAutomorphism r;
  r.images.resize(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) r.images[images[x]] = static_cast<Element>(x);
  return r;
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t x = 0; x < images.size(); ++x)
    if (images[x] != x) return false;
  return true;
}

ElementSet apply(const GroupAutomorphism& a, const ElementSet& s) {
  if (s.universe() != a.degree()) throw PreconditionError("automorphism and set over different groups");
  ElementSet out(s.universe());
  for (auto e : s.elements()) out.insert(a(e));
  return out;
}

bool is_automorphism(const GroupTable& h, const std::vector<Element>& images) {
  if (images.size() != h.order()) return false;
  std::vector<char> seen(h.order(), 0);
  for (auto e : images) {
    if (e >= h.order() || seen[e]) return false;
    seen[e] = 1;
  }
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = 0; y < h.order(); ++y)
      if (images[h.mul(x, y)] != h.mul(images[x], images[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

/// Subgroup generated by `gens`.
ElementSet close(const GroupTable& h, const std::vector<Element>& gens) {
  ElementSet out(h.order());
  out.insert(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      Element y = h.mul(queue[i], g);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

ElementSet subgroup_generated(const GroupTable& h, const ElementSet& x) {
  require_over(h, x);
  ElementSet out = close(h, x.elements());
  check(h.order() % out.size() == 0, "subgroup order does not divide group order");
  return out;
}

bool is_subgroup(const GroupTable& h, const ElementSet& n) {
  require_over(h, n);
  if (!n.contains(kIdentity)) return false;
  auto elems = n.elements();
  for (auto a : elems)
    for (auto b : elems)
      if (!n.contains(h.mul(a, b))) return false;
  return true;
}

bool is_abelian(const GroupTable& h) {
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = x + 1; y < h.order(); ++y)
      if (h.mul(x, y) != h.mul(y, x)) return false;
  return true;
}

bool is_normal(const GroupTable& h, const ElementSet& n) {
  if (!is_subgroup(h, n)) throw PreconditionError("set is not a subgroup");
  auto elems = n.elements();
  for (Element g = 0; g < h.order(); ++g)
    for (auto x : elems)
      if (!n.contains(h.conj(x, g))) return false;
  return true;
}

ElementSet center(const GroupTable& h) {
  ElementSet z(h.order());
  for (Element x = 0; x < h.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < h.order() && central; ++y) central = h.mul(x, y) == h.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

Quotient quotient(const GroupTable& h, const ElementSet& n) {
  require_over(h, n);
  if (!is_normal(h, n)) throw PreconditionError("subgroup is not normal");
  const std::size_t order = h.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> proj(order, kUnset);
  std::vector<Element> reps;
  auto members = n.elements();
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != kUnset) continue;
    auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto m : members) proj[h.mul(x, m)] = idx;
  }
  const std::size_t qo = reps.size();
  check(qo * members.size() == order, "coset count mismatch");
  std::vector<Element> mult(qo * qo);
  for (std::size_t a = 0; a < qo; ++a)
    for (std::size_t b = 0; b < qo; ++b) mult[a * qo + b] = proj[h.mul(reps[a], reps[b])];
  std::vector<NamedGenerator> gens;
  for (const auto& g : h.gens()) gens.push_back({g.label, proj[g.element]});
  std::string tag = h.family_tag().empty() ? "H/N" : "(" + h.family_tag() + ")/N";
  GroupTable q(qo, std::move(mult), std::move(gens), std::move(tag));
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y)
      check(proj[h.mul(x, y)] == q.mul(proj[x], proj[y]), "projection is not a homomorphism");
  return Quotient{std::move(q), std::move(proj)};
}

std::vector<Element> generating_sequence(const GroupTable& h) {
  std::vector<Element> seq;
  ElementSet cur(h.order());
  cur.insert(kIdentity);
  while (cur.size() < h.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    auto trial = seq;
    trial.push_back(0);
    for (Element x = 0; x < h.order(); ++x) {
      if (cur.contains(x)) continue;
      trial.back() = x;
      auto s = close(h, trial).size();
      if (s > best_size) {
        best_size = s;
        best = x;
        if (s == h.order()) break;
      }
    }
    seq.push_back(best);
    cur = close(h, seq);
  }
  return seq;
}

namespace {

/// Breadth-first spanning tree of the Cayley graph w.r.t. a generating
/// sequence: every non-identity element e equals parent[e] * gens[via[e]].
struct SpanningTree {
  std::vector<Element> order;  // BFS order, identity first
  std::vector<Element> parent;
  std::vector<std::size_t> via;
};

SpanningTree spanning_tree(const GroupTable& h, const std::vector<Element>& gens) {
  SpanningTree t;
  t.parent.assign(h.order(), 0);
  t.via.assign(h.order(), 0);
  std::vector<char> seen(h.order(), 0);
  seen[kIdentity] = 1;
  t.order.push_back(kIdentity);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    Element x = t.order[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = h.mul(x, gens[k]);
      if (!seen[y]) {
        seen[y] = 1;
        t.parent[y] = x;
        t.via[y] = k;
        t.order.push_back(y);
      }
    }
  }
  check(t.order.size() == h.order(), "generating sequence does not generate");
  return t;
}

/// Enumerates homomorphisms src -> dst that are bijective, determined by the
/// images of a generating sequence. `emit` returns false to stop early.
template <class Emit>
void enumerate_isomorphisms(const GroupTable& src, const GroupTable& dst, Emit&& emit) {
  if (src.order() != dst.order()) return;
  const auto seq = generating_sequence(src);
  const auto tree = spanning_tree(src, seq);

  // Sizes of the successive subgroups <g_0..g_i> in src.
  std::vector<std::size_t> prefix_size;
  for (std::size_t i = 1; i <= seq.size(); ++i)
    prefix_size.push_back(close(src, std::vector<Element>(seq.begin(), seq.begin() + i)).size());

  std::vector<Element> img(seq.size());
  std::vector<ElementSet> prefix(seq.size() + 1, ElementSet(dst.order()));
  prefix[0].insert(kIdentity);
  std::vector<Element> images(src.order());
  bool stop = false;

  auto try_leaf = [&]() {
    images[kIdentity] = kIdentity;
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
      Element e = tree.order[i];
      images[e] = dst.mul(images[tree.parent[e]], img[tree.via[e]]);
    }
    for (Element x = 0; x < src.order(); ++x)
      for (std::size_t k = 0; k < seq.size(); ++k)
        if (images[src.mul(x, seq[k])] != dst.mul(images[x], img[k])) return;
    std::vector<char> seen(dst.order(), 0);
    for (auto e : images) {
      if (seen[e]) return;
      seen[e] = 1;
    }
    if (!emit(images)) stop = true;
  };

  auto rec = [&](auto& self, std::size_t i) -> void {
    if (stop) return;
    if (i == seq.size()) {
      try_leaf();
      return;
    }
    const std::size_t want = src.element_order(seq[i]);
    for (Element t = 0; t < dst.order() && !stop; ++t) {
      if (dst.element_order(t) != want || prefix[i].contains(t)) continue;
      img[i] = t;
      prefix[i + 1] = close(dst, std::vector<Element>(img.begin(), img.begin() + i + 1));
      if (prefix[i + 1].size() != prefix_size[i]) continue;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

std::vector<std::size_t> order_profile(const GroupTable& h) {
  std::vector<std::size_t> p;
  for (Element x = 0; x < h.order(); ++x) p.push_back(h.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::vector<GroupAutomorphism> automorphism_group_of_group(const GroupTable& h, const AutOptions& opts) {
  if (h.order() > opts.max_order)
    throw CapExceeded("Aut(H) requested for order " + std::to_string(h.order()) + " above cap " +
                      std::to_string(opts.max_order));
  std::vector<GroupAutomorphism> out;
  bool overflow = false;
  enumerate_isomorphisms(h, h, [&](const std::vector<Element>& images) {
    if (out.size() >= opts.max_automorphisms) {
      overflow = true;
      return false;
    }
    out.push_back(GroupAutomorphism{images});
    return true;
  });
  if (overflow) throw CapExceeded("|Aut(H)| exceeds cap " + std::to_string(opts.max_automorphisms));
  std::sort(out.begin(), out.end());
  check(!out.empty() && out.front().is_identity(), "identity automorphism missing");

  // Closure under composition; exhaustive for small lists, against the
  // first few elements otherwise.
  std::set<std::vector<Element>> members;
  for (const auto& a : out) members.insert(a.images);
  const std::size_t right = out.size() <= 200 ? out.size() : std::min<std::size_t>(out.size(), 8);
  for (const auto& a : out)
    for (std::size_t j = 0; j < right; ++j)
      check(members.count(a.then(out[j]).images) == 1, "Aut(H) not closed under composition");
  return out;
}

GroupAutomorphism inner_automorphism(const GroupTable& h, Element y) {
  GroupAutomorphism a;
  a.images.resize(h.order());
  for (Element x = 0; x < h.order(); ++x) a.images[x] = h.conj(x, y);
  check(is_automorphism(h, a.images), "inner automorphism is not a homomorphism");
  return a;
}

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& h1, const GroupTable& h2) {
  if (h1.order() != h2.order()) return std::nullopt;
  if (order_profile(h1) != order_profile(h2)) return std::nullopt;
  std::optional<std::vector<Element>> found;
  enumerate_isomorphisms(h1, h2, [&](const std::vector<Element>& images) {
    found = images;
    return false;
  });
  return found;
}

bool is_inner_abelian(const GroupTable& h) {
  if (is_abelian(h)) return false;
  const std::size_t n = h.order();
  // <x,y> only depends on the cyclic subgroup <x> and on the double coset
  // <x> y <x>, so one representative of each suffices.
  Bitset seen_cyclic(n);
  for (Element x = 1; x < n; ++x) {
    if (seen_cyclic.test(x)) continue;
    std::vector<Element> cyc{kIdentity};
    for (Element p = x; p != kIdentity; p = h.mul(p, x)) cyc.push_back(p);
    for (Element p : cyc)
      if (h.element_order(p) == h.element_order(x)) seen_cyclic.set(p);
    Bitset done(n);
    for (Element y = 0; y < n; ++y) {
      if (done.test(y)) continue;
      for (Element l : cyc)
        for (Element r : cyc) done.set(h.mul(h.mul(l, y), r));
      if (h.mul(x, y) == h.mul(y, x)) continue;
      if (close(h, {x, y}).size() != n) return false;
    }
  }
  return true;
}

}  // namespace haarcay
