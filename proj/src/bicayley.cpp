#include "haarcay/bicayley.hpp"

#include <unordered_map>

#include "haarcay/automorphism.hpp"
#include "haarcay/error.hpp"

namespace haarcay {

DeltaMap build_delta(const GroupTable& h, const GroupAutomorphism& alpha, Element x, Element y) {
  const std::size_t n = h.order();
  std::vector<Point> img(2 * n);
  for (Element e = 0; e < n; ++e) {
    img[e] = static_cast<Point>(n + h.mul(x, alpha(e)));
    img[n + e] = h.mul(y, alpha(e));
  }
  return {alpha, x, y, Perm(std::move(img))};
}

SigmaMap build_sigma(const GroupTable& h, const GroupAutomorphism& alpha, Element g) {
  const std::size_t n = h.order();
  std::vector<Point> img(2 * n);
  for (Element e = 0; e < n; ++e) {
    img[e] = alpha(e);
    img[n + e] = static_cast<Point>(n + h.mul(g, alpha(e)));
  }
  return {alpha, g, Perm(std::move(img))};
}

Perm right_translation(const GroupTable& h, Element g) {
  const std::size_t n = h.order();
  std::vector<Point> img(2 * n);
  for (Element e = 0; e < n; ++e) {
    img[e] = h.mul(e, g);
    img[n + e] = static_cast<Point>(n + h.mul(e, g));
  }
  return Perm(std::move(img));
}

std::vector<Perm> right_translation_generators(const GroupTable& h) {
  std::vector<Perm> out;
  for (Element g : generating_sequence(h)) out.push_back(right_translation(h, g));
  return out;
}

PermGroup right_regular_group(const GroupTable& h) {
  return PermGroup(2 * h.order(), right_translation_generators(h));
}

namespace {

std::vector<GroupAutomorphism> aut_or_compute(const GroupTable& h, const std::vector<GroupAutomorphism>* aut) {
  return aut ? *aut : automorphism_group_of_group(h);
}

}  // namespace

std::vector<SigmaMap> compute_F(const GroupTable& h, const ElementSet& s, const std::vector<GroupAutomorphism>* aut) {
  const auto auts = aut_or_compute(h, aut);
  const Graph g = haar_graph(h, s).graph;
  std::vector<ElementSet> translates;
  for (Element x = 0; x < h.order(); ++x) translates.push_back(left_translate(h, h.inv(x), s));
  std::vector<SigmaMap> out;
  for (const auto& a : auts) {
    ElementSet sa = apply(a, s);
    for (Element x = 0; x < h.order(); ++x) {
      if (!(sa == translates[x])) continue;
      SigmaMap m = build_sigma(h, a, x);
      check(is_graph_automorphism(g, m.perm), "sigma map in F is not an automorphism");
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<DeltaMap> compute_I(const GroupTable& h, const ElementSet& s, const std::vector<GroupAutomorphism>* aut) {
  const auto auts = aut_or_compute(h, aut);
  const Graph g = haar_graph(h, s).graph;
  const ElementSet sinv = inverse_set(h, s);
  // y^-1 S^-1 x for every (x, y), keyed by the set.
  std::unordered_map<Bitset, std::vector<std::pair<Element, Element>>> by_set;
  for (Element x = 0; x < h.order(); ++x) {
    ElementSet right = right_translate(h, sinv, x);
    for (Element y = 0; y < h.order(); ++y)
      by_set[left_translate(h, h.inv(y), right).bits()].emplace_back(x, y);
  }
  std::vector<DeltaMap> out;
  for (const auto& a : auts) {
    auto it = by_set.find(apply(a, s).bits());
    if (it == by_set.end()) continue;
    for (auto [x, y] : it->second) {
      DeltaMap m = build_delta(h, a, x, y);
      check(is_graph_automorphism(g, m.perm), "delta map in I is not an automorphism");
      out.push_back(std::move(m));
    }
  }
  return out;
}

NormalizerStructure normalizer_structure(const GroupTable& h, const ElementSet& s,
                                         const std::vector<GroupAutomorphism>* aut) {
  const auto auts = aut_or_compute(h, aut);
  NormalizerStructure ns;
  ns.F = compute_F(h, s, &auts);
  ns.I = compute_I(h, s, &auts);
  ns.generators = right_translation_generators(h);
  for (const auto& f : ns.F) ns.generators.push_back(f.perm);
  if (!ns.I.empty()) ns.generators.push_back(ns.I.front().perm);
  ns.group = PermGroup(2 * h.order(), ns.generators);

  const std::size_t n = h.order();
  for (const auto& x : ns.generators)
    for (const auto& r : right_translation_generators(h)) {
      Perm c = x.inverse() * r * x;
      check(c == right_translation(h, c(0)), "structure group does not normalise R(H)");
    }
  BigInt expected = BigInt(n) * ns.F.size() * (ns.I.empty() ? 1 : 2);
  check(ns.group.order() == expected, "normaliser order differs from |H||F| (times 2 when I is non-empty)");
  return ns;
}

std::optional<PermGroup> vt_certificate_via_I(const GroupTable& h, const ElementSet& s,
                                              const std::vector<GroupAutomorphism>* aut) {
  auto i = compute_I(h, s, aut);
  if (i.empty()) return std::nullopt;
  auto gens = right_translation_generators(h);
  gens.push_back(i.front().perm);
  PermGroup g(2 * h.order(), std::move(gens));
  check(g.is_transitive(), "<R(H), delta> is not transitive");
  return g;
}

std::optional<DeltaCertificate> cayley_certificate_via_delta(const GroupTable& h, const ElementSet& s,
                                                             const std::vector<GroupAutomorphism>* aut) {
  const auto rgens = right_translation_generators(h);
  for (auto& d : compute_I(h, s, aut)) {
    // |<R(H), delta>| = 2|H| iff delta^2 lies in R(H).
    Perm sq = d.perm * d.perm;
    if (!(sq == right_translation(h, sq(0)))) continue;
    auto gens = rgens;
    gens.push_back(d.perm);
    PermGroup g(2 * h.order(), std::move(gens));
    check(g.order() == BigInt(2 * h.order()), "<R(H), delta> has unexpected order");
    check(g.is_regular(), "<R(H), delta> is not regular");
    return DeltaCertificate{std::move(d), std::move(g)};
  }
  return std::nullopt;
}

}  // namespace haarcay
