#include "haarcay/transitivity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "haarcay/error.hpp"

namespace haarcay {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("group ring coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("group ring coefficient overflow");
  return r;
}

void same_table(const GroupRingVector& u, const GroupRingVector& v) {
  if (&u.group() != &v.group() && !(u.group() == v.group()))
    throw PreconditionError("group ring vectors over different groups");
}

std::string show(const std::vector<Element>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "}";
  return os.str();
}

}  // namespace

GroupRingVector::GroupRingVector(const GroupTable& h) : h_(&h), c_(h.order(), 0) {}

GroupRingVector::GroupRingVector(const GroupTable& h, std::vector<std::int64_t> coeffs)
    : h_(&h), c_(std::move(coeffs)) {
  if (c_.size() != h.order()) throw PreconditionError("coefficient vector has wrong length");
}

GroupRingVector GroupRingVector::simple(const GroupTable& h, const ElementSet& s) {
  GroupRingVector u(h);
  for (Element x : s.elements()) u.c_[x] = 1;
  return u;
}

GroupRingVector GroupRingVector::singleton(const GroupTable& h, Element x) {
  GroupRingVector u(h);
  u.c_[x] = 1;
  return u;
}

bool GroupRingVector::is_simple() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0 || v == 1; });
}

ElementSet GroupRingVector::support() const {
  ElementSet s(c_.size());
  for (Element x = 0; x < c_.size(); ++x)
    if (c_[x]) s.insert(x);
  return s;
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& o) {
  same_table(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

GroupRingVector GroupRingVector::scaled(std::int64_t k) const {
  GroupRingVector r(*h_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_mul(c_[i], k);
  return r;
}

GroupRingVector convolution(const GroupRingVector& u, const GroupRingVector& v) {
  same_table(u, v);
  const GroupTable& h = u.group();
  GroupRingVector r(h);
  // sum over g, k of u_g v_k (g k)
  std::vector<std::int64_t> out(h.order(), 0);
  for (Element g = 0; g < h.order(); ++g) {
    if (!u[g]) continue;
    for (Element k = 0; k < h.order(); ++k) {
      if (!v[k]) continue;
      Element gk = h.mul(g, k);
      out[gk] = checked_add(out[gk], checked_mul(u[g], v[k]));
    }
  }
  return GroupRingVector(h, std::move(out));
}

GroupRingVector schur_hadamard(const GroupRingVector& u, const GroupRingVector& v) {
  same_table(u, v);
  GroupRingVector r(u.group());
  for (Element x = 0; x < u.size(); ++x) r.set(x, checked_mul(u[x], v[x]));
  return r;
}

GroupRingVector level_set(const GroupRingVector& u, std::int64_t c) {
  GroupRingVector r(u.group());
  for (Element x = 0; x < u.size(); ++x) r.set(x, u[x] == c ? 1 : 0);
  return r;
}

GroupRingVector inverse_closure(const GroupRingVector& u) {
  GroupRingVector r(u.group());
  for (Element x = 0; x < u.size(); ++x) r.set(u.group().inv(x), u[x]);
  return r;
}

GroupRingVector generated_subgroup_quantity(const GroupRingVector& u) {
  if (!u.is_simple()) throw PreconditionError("generated_subgroup_quantity needs a simple quantity");
  return GroupRingVector::simple(u.group(), subgroup_generated(u.group(), u.support()));
}

Perm right_translation_on(const GroupTable& h, Element g) {
  std::vector<Point> img(h.order());
  for (Element x = 0; x < h.order(); ++x) img[x] = h.mul(x, g);
  return Perm(std::move(img));
}

Perm left_translation_on(const GroupTable& h, Element g) {
  std::vector<Point> img(h.order());
  for (Element x = 0; x < h.order(); ++x) img[x] = h.mul(h.inv(g), x);
  return Perm(std::move(img));
}

PermGroup right_regular_action(const GroupTable& h) {
  std::vector<Perm> gens;
  for (Element g : generating_sequence(h)) gens.push_back(right_translation_on(h, g));
  return PermGroup(h.order(), std::move(gens));
}

TransitivityModule::TransitivityModule(const GroupTable& h, std::vector<std::vector<Element>> basic_sets)
    : h_(&h), sets_(std::move(basic_sets)), of_(h.order(), h.order()) {
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  std::sort(sets_.begin(), sets_.end());
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (Element x : sets_[i]) {
      if (x >= h.order() || of_[x] != h.order()) throw PreconditionError("basic sets must partition the group");
      of_[x] = i;
    }
  for (std::size_t x = 0; x < h.order(); ++x)
    if (of_[x] == h.order()) throw PreconditionError("basic sets must cover the group");
  if (sets_.empty() || sets_.front() != std::vector<Element>{kIdentity})
    throw PreconditionError("{1} must be a basic set");
}

GroupRingVector TransitivityModule::basic_quantity(std::size_t i) const {
  GroupRingVector u(*h_);
  for (Element x : sets_[i]) u.set(x, 1);
  return u;
}

std::optional<std::vector<std::int64_t>> TransitivityModule::decompose(const GroupRingVector& u) const {
  std::vector<std::int64_t> coeff(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    coeff[i] = u[sets_[i].front()];
    for (Element x : sets_[i])
      if (u[x] != coeff[i]) return std::nullopt;
  }
  return coeff;
}

bool TransitivityModule::is_basic(const ElementSet& s) const {
  auto xs = s.elements();
  if (xs.empty()) return false;
  return sets_[of_[xs.front()]] == xs;
}

TransitivityModule transitivity_module(const GroupTable& h, const PermGroup& g) {
  if (g.degree() != h.order()) throw PreconditionError("G must act on the elements of H");
  for (Element x : generating_sequence(h))
    if (!g.contains(right_translation_on(h, x))) throw PreconditionError("G does not contain R(H)");
  PermGroup stab = g.stabilizer(kIdentity);
  std::vector<std::vector<Element>> sets;
  for (auto& o : stab.orbits()) sets.emplace_back(o.begin(), o.end());
  TransitivityModule m(h, std::move(sets));
  for (std::size_t i = 0; i < m.basic_sets().size(); ++i)
    for (std::size_t j = 0; j < m.basic_sets().size(); ++j)
      check(m.contains(convolution(m.basic_quantity(i), m.basic_quantity(j))),
            "transitivity module is not closed under multiplication");
  return m;
}

bool is_block_of_imprimitivity(const PermGroup& g, const Bitset& b) {
  if (!g.is_transitive()) throw PreconditionError("block test needs a transitive group");
  if (b.size() != g.degree()) throw PreconditionError("point set has wrong universe");
  if (b.none()) return false;
  std::set<Bitset> seen{b};
  std::vector<Bitset> queue{b};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      Bitset img(g.degree());
      queue[i].for_each([&](std::size_t x) { img.set(s(static_cast<Point>(x))); });
      if (seen.count(img)) continue;
      for (const auto& other : queue)
        if (img.intersects(other)) return false;
      seen.insert(img);
      queue.push_back(std::move(img));
    }
  }
  return true;
}

bool LawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

LawReport module_law_suite(const GroupTable& h, const PermGroup& g) {
  const TransitivityModule m = transitivity_module(h, g);
  const auto& sets = m.basic_sets();
  const std::size_t k = sets.size();
  LawReport rep;
  auto law = [&](const std::string& name) -> LawResult& {
    rep.laws.push_back({name, true, {}});
    return rep.laws.back();
  };
  auto fail = [](LawResult& l, const std::string& why) {
    if (l.pass) {
      l.pass = false;
      l.counterexample = why;
    }
  };

  std::vector<GroupRingVector> basic;
  for (std::size_t i = 0; i < k; ++i) basic.push_back(m.basic_quantity(i));
  // Module elements to test: basic quantities, their products, and unions
  // of two basic sets.
  std::vector<GroupRingVector> members = basic;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) members.push_back(convolution(basic[i], basic[j]));
  std::vector<GroupRingVector> simple_members = basic;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) simple_members.push_back(basic[i] + basic[j]);

  {
    auto& l = law("ring closure");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!m.contains(members[k + i * k + j]))
          fail(l, "product of basic sets " + show(sets[i]) + " and " + show(sets[j]));
  }
  {
    auto& l = law("level sets");
    for (const auto& u : members) {
      std::set<std::int64_t> values(u.coeffs().begin(), u.coeffs().end());
      for (auto c : values)
        if (!m.contains(level_set(u, c))) fail(l, "level " + std::to_string(c) + " of a product");
    }
  }
  {
    auto& l = law("Schur-Hadamard closure");
    for (const auto& u : members)
      for (std::size_t i = 0; i < k; ++i)
        if (!m.contains(schur_hadamard(u, basic[i]))) fail(l, "product with " + show(sets[i]));
  }
  {
    auto& l = law("generated subgroup");
    for (const auto& u : simple_members)
      if (!m.contains(generated_subgroup_quantity(u))) fail(l, "subgroup generated by " + show(u.support().elements()));
  }
  {
    auto& l = law("inverse closure");
    for (const auto& u : simple_members)
      if (!m.contains(inverse_closure(u))) fail(l, "inverse of " + show(u.support().elements()));
  }
  {
    auto& l = law("translates of basic sets");
    for (std::size_t i = 0; i < k; ++i) {
      if (sets[i].size() != 1) continue;
      Element x = sets[i].front();
      for (std::size_t j = 0; j < k; ++j) {
        ElementSet s = ElementSet::from(h.order(), sets[j]);
        if (!m.is_basic(left_translate(h, x, s)) || !m.is_basic(right_translate(h, s, x)))
          fail(l, std::to_string(x) + " times " + show(sets[j]));
      }
    }
  }
  {
    auto& l = law("subgroup blocks");
    for (const auto& u : simple_members) {
      ElementSet sub = subgroup_generated(h, u.support());
      if (!is_block_of_imprimitivity(g, sub.bits())) fail(l, "<" + show(u.support().elements()) + ">");
    }
  }
  {
    auto& l = law("left translations centralise");
    for (std::size_t i = 0; i < k; ++i) {
      if (sets[i].size() != 1) continue;
      Perm lt = left_translation_on(h, sets[i].front());
      for (const auto& s : g.generators())
        if (!(lt * s == s * lt)) fail(l, "L(" + std::to_string(sets[i].front()) + ")");
    }
  }
  return rep;
}

}  // namespace haarcay
