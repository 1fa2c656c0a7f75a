#include "haarcay/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "haarcay/automorphism.hpp"
#include "haarcay/error.hpp"
#include "haarcay/words.hpp"

namespace haarcay {

// ---------------------------------------------------------------------------
// Quotient obstruction

ObstructionReport check_quotient_obstruction(const GroupTable& h, const ElementSet& n, const ElementSet& sbar,
                                             const ObstructionOptions& opts) {
  if (n.universe() != h.order()) throw PreconditionError("N is not a subset of H");
  if (!is_normal(h, n)) throw PreconditionError("N is not normal in H");
  const Quotient q = quotient(h, n);
  const GroupTable& qg = q.group;
  if (sbar.universe() != qg.order()) throw PreconditionError("S-bar is not a subset of H/N");

  ObstructionReport r;
  r.group_order = h.order();
  r.normal_order = n.size();
  r.quotient_order = qg.order();
  r.normal = n.elements();
  r.sbar = sbar.elements();

  const Graph quotient_graph = haar_graph(qg, sbar).graph;
  auto vt = vertex_transitivity(quotient_graph, opts.status.ir);
  r.nodes = vt.nodes;
  r.quotient_vertex_transitive = vt.transitive;
  if (!vt.transitive) r.quotient_orbits = std::move(vt.orbits);

  for (Element x = 1; x < qg.order(); ++x) {
    if (right_translate(qg, sbar, x) == sbar) r.right_stable.push_back(x);
    if (left_translate(qg, x, sbar) == sbar) r.left_stable.push_back(x);
  }

  ElementSet pre(h.order());
  for (Element x = 0; x < h.order(); ++x)
    if (sbar.contains(q.projection[x])) pre.insert(x);
  r.preimage = pre.elements();

  // h_i -> ((hN)_i, rank of h inside its coset)
  const std::size_t nh = h.order(), nq = qg.order(), k = n.size();
  std::vector<std::size_t> rank(nh), filled(nq, 0);
  for (Element x = 0; x < nh; ++x) rank[x] = filled[q.projection[x]]++;
  std::vector<Vertex> map(2 * nh);
  for (std::size_t part = 0; part < 2; ++part)
    for (Element x = 0; x < nh; ++x)
      map[part * nh + x] = static_cast<Vertex>((part * nq + q.projection[x]) * k + rank[x]);
  const Graph blown = haar_graph(h, pre).graph;
  const Graph lex = lex_product(quotient_graph, empty_graph(k));
  r.blowup_isomorphic = relabel(blown, map) == lex;
  check(r.blowup_isomorphic, "H(H, preimage) is not the lexicographic blow-up of H(H/N, S-bar)");
  return r;
}

Json obstruction_to_json(const ObstructionReport& r) {
  Json j{{"group_order", r.group_order},
         {"normal_order", r.normal_order},
         {"quotient_order", r.quotient_order},
         {"normal", r.normal},
         {"sbar", r.sbar},
         {"quotient_vertex_transitive", r.quotient_vertex_transitive},
         {"right_stable", r.right_stable},
         {"left_stable", r.left_stable},
         {"condition_i", r.condition_i()},
         {"condition_ii", r.condition_ii()},
         {"blowup_isomorphic", r.blowup_isomorphic},
         {"conclusion", r.conclusion()},
         {"nodes", r.nodes}};
  if (!r.quotient_orbits.empty()) j["quotient_orbits"] = r.quotient_orbits;
  return j;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

/// A generating set of Aut(H), picked greedily from the full list.
std::vector<GroupAutomorphism> aut_generators(const GroupTable& h) {
  const auto all = automorphism_group_of_group(h);
  std::vector<GroupAutomorphism> gens;
  std::set<GroupAutomorphism> closure{GroupAutomorphism::identity(h.order())};
  for (const auto& a : all) {
    if (closure.count(a)) continue;
    gens.push_back(a);
    std::vector<GroupAutomorphism> queue(closure.begin(), closure.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        auto next = queue[i].then(g);
        if (closure.insert(next).second) queue.push_back(std::move(next));
      }
    if (closure.size() == all.size()) break;
  }
  return gens;
}

std::uint32_t mask_of(const ElementSet& s) {
  std::uint32_t m = 0;
  for (Element x : s.elements())
    if (x != kIdentity) m |= 1u << (x - 1);
  return m;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ElementSet subset_from_mask(const GroupTable& h, std::uint32_t mask) {
  ElementSet s(h.order());
  s.insert(kIdentity);
  for (Element x = 1; x < h.order(); ++x)
    if (mask >> (x - 1) & 1u) s.insert(x);
  return s;
}

HaarClasses haar_classes(const GroupTable& h) {
  if (h.order() > 21) throw CapExceeded("subset classes need order at most 21");
  const std::uint32_t total = 1u << (h.order() - 1);
  const auto gens = aut_generators(h);
  UnionFind uf(total);
  for (std::uint32_t m = 0; m < total; ++m) {
    ElementSet s = subset_from_mask(h, m);
    for (const auto& a : gens) uf.unite(m, mask_of(apply(a, s)));
    uf.unite(m, mask_of(inverse_set(h, s)));
    for (Element x : s.elements())
      if (x != kIdentity) uf.unite(m, mask_of(left_translate(h, h.inv(x), s)));
  }
  HaarClasses c;
  c.representative.resize(total);
  for (std::uint32_t m = 0; m < total; ++m) {
    c.representative[m] = uf.find(m);
    if (c.representative[m] == m) c.representatives.push_back(m);
  }
  return c;
}

void enumerate_haar(const GroupTable& h, const EnumerateOptions& opts,
                    const std::function<void(const EnumeratedHaar&)>& emit) {
  if (h.order() > opts.max_order)
    throw CapExceeded("exhaustive enumeration is limited to order " + std::to_string(opts.max_order));
  const std::uint32_t total = 1u << (h.order() - 1);
  std::vector<std::uint32_t> masks;
  std::map<std::uint32_t, std::size_t> sizes;
  if (opts.dedupe) {
    auto c = haar_classes(h);
    masks = c.representatives;
    for (auto r : c.representative) ++sizes[r];
  } else {
    masks.resize(total);
    std::iota(masks.begin(), masks.end(), 0u);
  }
  for (std::uint32_t m : masks) {
    EnumeratedHaar e;
    e.s = subset_from_mask(h, m);
    e.class_size = opts.dedupe ? sizes[m] : 1;
    const Graph g = haar_graph(h, e.s).graph;
    if (opts.connected_only && !is_connected(g)) continue;
    StatusHints hints;
    hints.haar = HaarHint{&h, e.s};
    e.certificate = cayley_status(g, hints, opts.status);
    e.verified = e.certificate.verdict != Verdict::Unknown && verify_certificate(g, e.certificate);
    emit(e);
  }
}

std::vector<EnumeratedHaar> enumerate_haar(const GroupTable& h, const EnumerateOptions& opts) {
  std::vector<EnumeratedHaar> out;
  enumerate_haar(h, opts, [&](const EnumeratedHaar& e) { out.push_back(e); });
  return out;
}

// ---------------------------------------------------------------------------
// Inner abelian groups

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Family specs of the listed inner abelian groups of exactly this order.
std::vector<FamilySpec> listed_specs(std::size_t order) {
  std::vector<FamilySpec> out;
  const long long n = static_cast<long long>(order);
  if (n == 8) out.push_back({QuaternionSpec{}});
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (int e = 1; ipow(p, e) <= n; ++e) {
      if (ipow(p, e) != n) continue;
      for (int m = 2; m < e; ++m) out.push_back({MpmnSpec{p, m, e - m}});
      for (int m = 1; m < e; ++m) {
        int k = e - 1 - m;
        if (k >= 1 && m >= k && (p != 2 || m + k >= 3)) out.push_back({Mpmn1Spec{p, m, k}});
      }
    }
  }
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (int a = 1; ipow(p, a) <= n; ++a)
      for (int q = 2; q <= n; ++q) {
        if (q == p || !is_prime(q)) continue;
        for (int m = 1; ipow(p, a) * ipow(q, m) <= n; ++m)
          if (ipow(p, a) * ipow(q, m) == n && (ipow(p, a) - 1) % q == 0 && cyclotomic_factor(p, a, q))
            out.push_back({MillerMorenoSpec{p, a, q, m, std::nullopt}});
      }
  }
  return out;
}

void add_if(std::vector<CatalogGroup>& out, FamilySpec spec, std::size_t max_order) {
  try {
    GroupTable h = build_family(spec);
    if (h.order() <= max_order) out.push_back({spec, family_name(spec), h.order()});
  } catch (const PreconditionError&) {
  }
}

}  // namespace

std::vector<CatalogGroup> group_catalog(std::size_t max_order) {
  std::vector<CatalogGroup> out;
  const int cap = static_cast<int>(std::min<std::size_t>(max_order, kMaxGroupOrder));
  for (int n = 1; n <= cap; ++n) add_if(out, {CyclicSpec{n}}, max_order);
  for (int n = 2; 2 * n <= cap; ++n) add_if(out, {DihedralSpec{n}}, max_order);
  if (cap >= 8) add_if(out, {QuaternionSpec{}}, max_order);
  for (int n = 1; n <= cap; ++n)
    for (auto& s : listed_specs(static_cast<std::size_t>(n)))
      if (!std::holds_alternative<QuaternionSpec>(s.value)) add_if(out, s, max_order);
  if (cap >= 12)
    add_if(out, {PresentedSpec{3, {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"}, "xyz"}}, max_order);
  for (int a = 2; a * a <= cap; ++a)
    for (int b = a; a * b <= cap; ++b) {
      DirectProductSpec d;
      d.factors = {FamilySpec{CyclicSpec{a}}, FamilySpec{CyclicSpec{b}}};
      add_if(out, {d}, max_order);
    }
  for (int n = 3; 4 * n <= cap; ++n) {
    DirectProductSpec d;
    d.factors = {FamilySpec{DihedralSpec{n}}, FamilySpec{CyclicSpec{2}}};
    add_if(out, {d}, max_order);
  }
  if (cap >= 16) {
    DirectProductSpec d;
    d.factors = {FamilySpec{QuaternionSpec{}}, FamilySpec{CyclicSpec{2}}};
    add_if(out, {d}, max_order);
  }
  if (cap >= 18) {
    DirectProductSpec d;
    d.factors = {FamilySpec{DihedralSpec{3}}, FamilySpec{CyclicSpec{3}}};
    add_if(out, {d}, max_order);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.order < y.order; });
  return out;
}

bool in_redei_miller_moreno_list(const GroupTable& h) {
  if (is_abelian(h)) return false;
  for (const auto& s : listed_specs(h.order()))
    if (are_isomorphic(build_family(s), h)) return true;
  return false;
}

std::vector<InnerAbelianEntry> inner_abelian_scan(std::size_t max_order) {
  std::vector<InnerAbelianEntry> out;
  for (const auto& g : group_catalog(max_order)) {
    GroupTable h = build_family(g.spec);
    out.push_back({g.name, g.order, is_inner_abelian(h), in_redei_miller_moreno_list(h)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reproduction cases

namespace {

FamilySpec presented_a4() { return {PresentedSpec{3, {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"}, "xyz"}}; }

FamilySpec presented_z2e3z7() {
  return {PresentedSpec{4,
                        {"xx", "yy", "zz", "uuuuuuu", "XYxy", "XZxz", "YZyz", "UxuY", "UyuZ", "UzuYX"},
                        "xyzu"}};
}

FamilySpec presented_z2e4z5() {
  return {PresentedSpec{5,
                        {"xx", "yy", "zz", "vv", "wwwww", "XYxy", "XZxz", "XVxv", "YZyz", "YVyv", "ZVzv",
                         "WxwV", "WywYX", "WzwZY", "WvwVZ"},
                        "xyzvw"}};
}

CaseSpec haar_case(std::string id, FamilySpec g, std::string set, std::string claim) {
  CaseSpec c;
  c.id = std::move(id);
  c.kind = CaseKind::Haar;
  c.group = std::move(g);
  c.set = std::move(set);
  c.expected = "NonCayley";
  c.claim = std::move(claim);
  return c;
}

CaseSpec enum_case(std::string id, FamilySpec g, bool connected, std::string claim) {
  CaseSpec c;
  c.id = std::move(id);
  c.kind = CaseKind::Enumerate;
  c.group = std::move(g);
  c.connected_only = connected;
  c.expected = "all-Cayley";
  c.claim = std::move(claim);
  return c;
}

CaseSpec obstruction_case(std::string id, FamilySpec g, std::string normal, std::string sbar,
                          std::optional<FamilySpec> model, std::string claim) {
  CaseSpec c;
  c.id = std::move(id);
  c.kind = CaseKind::Obstruction;
  c.group = std::move(g);
  c.normal = std::move(normal);
  c.set = std::move(sbar);
  c.quotient_model = std::move(model);
  c.expected = "obstructed";
  c.claim = std::move(claim);
  return c;
}

std::vector<CaseSpec> build_catalog() {
  const std::string five = "1,a,a-1,b,ab";
  const std::string six = "1,a,b,ab,ab2,ab3";
  const std::string seven = "1,a,a3,b,ab,a2b,a4b";
  std::vector<CaseSpec> v;
  v.push_back(haar_case("m3111-not-vt", {Mpmn1Spec{3, 1, 1}}, five,
                        "H(M_3(1,1,1), {1,a,a^-1,b,ab}) is not vertex-transitive"));
  v.push_back(haar_case("m2211-not-vt", {Mpmn1Spec{2, 2, 1}}, five,
                        "H(M_2(2,1,1), {1,a,a^-1,b,ab}) is not vertex-transitive"));
  v.push_back(haar_case("m222-not-vt", {MpmnSpec{2, 2, 2}}, six,
                        "H(M_2(2,2), {1,a,b,ab,ab^2,ab^3}) is not vertex-transitive"));
  v.push_back(haar_case("m2221-not-vt", {Mpmn1Spec{2, 2, 2}}, six,
                        "H(M_2(2,2,1), {1,a,b,ab,ab^2,ab^3}) is not vertex-transitive"));
  for (int p : {7, 11, 13})
    v.push_back(haar_case("d" + std::to_string(2 * p) + "-not-vt", {DihedralSpec{p}}, seven,
                          "H(D_" + std::to_string(2 * p) + ", {1,a,a^3,b,ab,a^2b,a^4b}) is not vertex-transitive"));
  for (int p : {3, 5})
    v.push_back(haar_case("z" + std::to_string(p) + "z4-not-vt", {MillerMorenoSpec{p, 1, 2, 2, std::nullopt}}, six,
                          "H(Z_" + std::to_string(p) + ":Z_4, {1,a,b,ab,ab^2,ab^3}) is not vertex-transitive"));
  v.push_back(haar_case("a4-not-vt", presented_a4(), "1,x,z,xyz", "H(A_4, {1,x,z,xyz}) is not vertex-transitive"));
  v.push_back(haar_case("z2e3z7-not-vt", presented_z2e3z7(), "1,x,u,xyu,xzu",
                        "H(Z_2^3:Z_7, {1,x,u,xyu,xzu}) is not vertex-transitive"));
  v.push_back(haar_case("z2e4z5-not-vt", presented_z2e4z5(), "1,x,w,xyw,xzw",
                        "H(Z_2^4:Z_5, {1,x,w,xyw,xzw}) is not vertex-transitive"));

  v.push_back(enum_case("q8-all-connected-cayley", {QuaternionSpec{}}, true,
                        "every connected Haar graph of Q_8 is a Cayley graph"));
  for (int n = 2; n <= 5; ++n)
    v.push_back(enum_case("d" + std::to_string(2 * n) + "-all-cayley", {DihedralSpec{n}}, false,
                          "every Haar graph of D_" + std::to_string(2 * n) + " is a Cayley graph"));

  v.push_back(obstruction_case("obstruct-m232", {MpmnSpec{2, 3, 2}}, "b2", five, std::nullopt,
                               "M_2(3,2) / <b^2> = M_2(3,1) gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-m2321", {Mpmn1Spec{2, 3, 2}}, "b2", five, std::nullopt,
                               "M_2(3,2,1) / <b^2> = M_2(3,1,1) gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-m223", {MpmnSpec{2, 2, 3}}, "b4", six, std::nullopt,
                               "M_2(2,3) / <b^4> = M_2(2,2) gives a non-Cayley Haar graph"));
  for (int p : {7, 11, 13})
    v.push_back(obstruction_case("obstruct-z" + std::to_string(p) + "z4", {MillerMorenoSpec{p, 1, 2, 2, std::nullopt}},
                                 "b2", seven, std::nullopt,
                                 "Z_" + std::to_string(p) + ":Z_4 / <b^2> = D_" + std::to_string(2 * p) +
                                     " gives a non-Cayley Haar graph"));
  for (int p : {3, 5})
    v.push_back(obstruction_case("obstruct-z" + std::to_string(p) + "z8", {MillerMorenoSpec{p, 1, 2, 3, std::nullopt}},
                                 "b4", six, std::nullopt,
                                 "Z_" + std::to_string(p) + ":Z_8 / <b^4> = Z_" + std::to_string(p) +
                                     ":Z_4 gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-z2e2z9", {MillerMorenoSpec{2, 2, 3, 2, std::nullopt}}, "b3", "1,x,z,xyz",
                               presented_a4(), "Z_2^2:Z_9 / <b^3> = A_4 gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-z2e2z9-five", {MillerMorenoSpec{2, 2, 3, 2, std::nullopt}}, "b3",
                               "1,x,z,z-1,xz", presented_a4(),
                               "Z_2^2:Z_9 / <b^3> = A_4 with S-bar = {1,x,z,z^-1,xz} gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-z2e3z49", {MillerMorenoSpec{2, 3, 7, 2, std::nullopt}}, "b7",
                               "1,x,u,xyu,xzu", presented_z2e3z7(),
                               "Z_2^3:Z_49 / <b^7> = Z_2^3:Z_7 gives a non-Cayley Haar graph"));
  v.push_back(obstruction_case("obstruct-z2e4z25", {MillerMorenoSpec{2, 4, 5, 2, std::nullopt}}, "b5",
                               "1,x,w,xyw,xzw", presented_z2e4z5(),
                               "Z_2^4:Z_25 / <b^5> = Z_2^4:Z_5 gives a non-Cayley Haar graph"));
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return v;
}

CaseReport run_haar(const CaseSpec& c, const ReproduceOptions& opts) {
  CaseReport r;
  GroupTable h = build_family(c.group);
  ElementSet s = parse_word_set(h, c.set);
  Graph g = haar_graph(h, s).graph;
  StatusHints hints;
  hints.haar = HaarHint{&h, s};
  Certificate cert = cayley_status(g, hints, opts.status);
  bool verified = cert.verdict != Verdict::Unknown && verify_certificate(g, cert);
  r.verdict = to_string(cert.verdict);
  r.nodes = cert.nodes;
  r.certificate = certificate_to_json(cert);
  r.certificate["vertices"] = g.n();
  r.certificate["vertex_transitive"] = cert.method != "intransitive";
  r.certificate["verified"] = verified;
  r.pass = verified && r.verdict == c.expected;
  return r;
}

CaseReport run_enumerate(const CaseSpec& c, const ReproduceOptions& opts) {
  CaseReport r;
  GroupTable h = build_family(c.group);
  EnumerateOptions eo;
  eo.connected_only = c.connected_only;
  eo.status = opts.status;
  std::size_t classes = 0, subsets = 0, cayley = 0, noncayley = 0, unknown = 0, unverified = 0;
  std::map<std::string, std::size_t> methods;
  enumerate_haar(h, eo, [&](const EnumeratedHaar& e) {
    ++classes;
    subsets += e.class_size;
    r.nodes += e.certificate.nodes;
    ++methods[e.certificate.method];
    if (!e.verified) ++unverified;
    switch (e.certificate.verdict) {
      case Verdict::Cayley: ++cayley; break;
      case Verdict::NonCayley: ++noncayley; break;
      case Verdict::Unknown: ++unknown; break;
    }
  });
  r.verdict = unknown ? "Unknown" : noncayley ? "some-NonCayley" : "all-Cayley";
  r.certificate = {{"classes", classes}, {"subsets", subsets},     {"cayley", cayley},
                   {"noncayley", noncayley}, {"unknown", unknown}, {"unverified", unverified},
                   {"methods", methods}};
  r.pass = r.verdict == c.expected && unverified == 0;
  return r;
}

CaseReport run_obstruction(const CaseSpec& c, const ReproduceOptions& opts) {
  CaseReport r;
  GroupTable h = build_family(c.group);
  ElementSet n = subgroup_generated(h, parse_word_set(h, c.normal));
  Quotient q = quotient(h, n);
  ElementSet sbar(q.group.order());
  if (c.quotient_model) {
    GroupTable model = build_family(*c.quotient_model);
    auto iso = find_isomorphism(model, q.group);
    if (!iso) throw PreconditionError("H/N is not isomorphic to the quotient model");
    for (Element x : parse_word_set(model, c.set).elements()) sbar.insert((*iso)[x]);
  } else {
    sbar = parse_word_set(q.group, c.set);
  }
  auto rep = check_quotient_obstruction(h, n, sbar, opts.obstruction);
  r.verdict = rep.obstructed() ? "obstructed" : "inconclusive";
  r.nodes = rep.nodes;
  r.certificate = obstruction_to_json(rep);
  r.pass = r.verdict == c.expected && rep.blowup_isomorphic;
  return r;
}

}  // namespace

const std::vector<CaseSpec>& case_catalog() {
  static const std::vector<CaseSpec> cases = build_catalog();
  return cases;
}

const CaseSpec& find_case(const std::string& id) {
  for (const auto& c : case_catalog())
    if (c.id == id) return c;
  std::string ids;
  for (const auto& c : case_catalog()) ids += (ids.empty() ? "" : ", ") + c.id;
  throw PreconditionError("unknown case '" + id + "'; valid ids: " + ids);
}

CaseReport reproduce(const CaseSpec& c, const ReproduceOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport r;
  try {
    switch (c.kind) {
      case CaseKind::Haar: r = run_haar(c, opts); break;
      case CaseKind::Enumerate: r = run_enumerate(c, opts); break;
      case CaseKind::Obstruction: r = run_obstruction(c, opts); break;
    }
  } catch (const BudgetExhausted& e) {
    r.verdict = "Unknown";
    r.nodes = e.nodes();
    r.certificate = {{"budget_report", e.what()}};
    r.pass = false;
  } catch (const Error& e) {
    r.verdict = "error";
    r.certificate = {{"error", e.what()}};
    r.pass = false;
  }
  r.case_id = c.id;
  r.expected = c.expected;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CaseReport reproduce(const std::string& id, const ReproduceOptions& opts) { return reproduce(find_case(id), opts); }

std::vector<CaseReport> reproduce_all(const ReproduceOptions& opts, const std::vector<CaseSpec>* cases) {
  const auto& list = cases ? *cases : case_catalog();
  std::vector<CaseReport> out(list.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < list.size();) out[i] = reproduce(list[i], opts);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(list.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.case_id < b.case_id; });
  return out;
}

Json report_to_json(const CaseReport& r) {
  return {{"case_id", r.case_id}, {"verdict", r.verdict},           {"expected", r.expected}, {"pass", r.pass},
          {"certificate", r.certificate}, {"nodes_explored", r.nodes}, {"millis", r.millis}};
}

}  // namespace haarcay
