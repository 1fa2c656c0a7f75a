// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "haarcay/automorphism.hpp"
#include "haarcay/bicayley.hpp"
#include "haarcay/catalog.hpp"
#include "haarcay/transitivity.hpp"
#include "haarcay/words.hpp"
#include "oracles.hpp"

using namespace haarcay;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

FamilySpec presented(const std::string& letters, std::vector<std::string> rels) {
  return {PresentedSpec{static_cast<int>(letters.size()), std::move(rels), letters}};
}

const FamilySpec kA4 = presented("xyz", {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"});
const FamilySpec kZ2e3Z7 =
    presented("xyzu", {"xx", "yy", "zz", "uuuuuuu", "XYxy", "XZxz", "YZyz", "UxuY", "UyuZ", "UzuYX"});
const FamilySpec kZ2e4Z5 = presented("xyzvw", {"xx", "yy", "zz", "vv", "wwwww", "XYxy", "XZxz", "XVxv", "YZyz", "YVyv",
                                              "ZVzv", "WxwV", "WywYX", "WzwZY", "WvwVZ"});

/// Haar graph must be definitively non-vertex-transitive within the limit.
void not_vt(Outcome& o, const std::string& label, const FamilySpec& spec, const std::string& words,
            std::size_t vertices, double limit) {
  auto t = Clock::now();
  GroupTable h = build_family(spec);
  Graph g = haar_graph(h, parse_word_set(h, words)).graph;
  if (g.n() != vertices) o.fail(label + ": " + std::to_string(g.n()) + " vertices");
  auto r = vertex_transitivity(g);
  double s = seconds_since(t);
  if (r.transitive) o.fail(label + " is vertex-transitive");
  if (s > limit) o.fail(label + " took " + std::to_string(s) + " s");
}

Outcome c1() {
  Outcome o;
  not_vt(o, "M_3(1,1,1)", {Mpmn1Spec{3, 1, 1}}, "1,a,a-1,b,ab", 54, 10);
  return o;
}

Outcome c2() {
  Outcome o;
  not_vt(o, "M_2(2,1,1)", {Mpmn1Spec{2, 2, 1}}, "1,a,a-1,b,ab", 32, 5);
  return o;
}

Outcome c3() {
  Outcome o;
  not_vt(o, "M_2(2,2)", {MpmnSpec{2, 2, 2}}, "1,a,b,ab,ab2,ab3", 32, 5);
  // |M_2(2,2,1)| = 2^(2+2+1), so its Haar graph has 64 vertices.
  not_vt(o, "M_2(2,2,1)", {Mpmn1Spec{2, 2, 2}}, "1,a,b,ab,ab2,ab3", 64, 5);
  return o;
}

Outcome c4() {
  Outcome o;
  for (int p : {7, 11, 13})
    not_vt(o, "D_" + std::to_string(2 * p), {DihedralSpec{p}}, "1,a,a3,b,ab,a2b,a4b", 4 * p, 5);
  return o;
}

Outcome c5() {
  Outcome o;
  for (int p : {3, 5})
    not_vt(o, "Z_" + std::to_string(p) + ":Z_4", {MillerMorenoSpec{p, 1, 2, 2, std::nullopt}}, "1,a,b,ab,ab2,ab3",
           8 * p, 5);
  return o;
}

Outcome c6() {
  Outcome o;
  auto t = Clock::now();
  not_vt(o, "A4", kA4, "1,x,z,xyz", 24, 5);
  GroupTable h = build_family(kA4);
  ElementSet s = parse_word_set(h, "1,x,z,xyz");
  for (Element x = 1; x < h.order(); ++x) {
    if (right_translate(h, s, x) == s) o.fail("S = S" + word_for(h, x));
    if (left_translate(h, x, s) == s) o.fail("S = " + word_for(h, x) + "S");
  }
  if (seconds_since(t) > 5) o.fail("over 5 s");
  return o;
}

Outcome c7() {
  Outcome o;
  not_vt(o, "Z_2^3:Z_7", kZ2e3Z7, "1,x,u,xyu,xzu", 112, 60);
  return o;
}

Outcome c8() {
  Outcome o;
  not_vt(o, "Z_2^4:Z_5", kZ2e4Z5, "1,x,w,xyw,xzw", 160, 300);
  return o;
}

Outcome c9() {
  Outcome o;
  auto t = Clock::now();
  GroupTable q = build_family({QuaternionSpec{}});
  EnumerateOptions eo;
  eo.connected_only = true;
  Graph k88 = complete_bipartite(8, 8);
  Graph minus(16);
  for (auto [u, v] : k88.edges())
    if (v != u + 8) minus.add_edge(u, v);
  std::size_t classes = 0;
  for (const auto& e : enumerate_haar(q, eo)) {
    ++classes;
    std::string name = "S = {" + [&] {
      std::string w;
      for (Element x : e.s.elements()) w += (w.empty() ? "" : ",") + word_for(q, x);
      return w;
    }() + "}";
    Graph g = haar_graph(q, e.s).graph;
    if (e.certificate.verdict != Verdict::Cayley || !e.verified || !verify_certificate(g, e.certificate))
      o.fail(name + " has no verified Cayley certificate");
    if (e.s.size() == 7 && !are_isomorphic(g, minus)) o.fail(name + " is not K_{8,8} minus a matching");
    if (e.s.size() == 8 && !(g == k88)) o.fail(name + " is not K_{8,8}");
  }
  if (classes == 0) o.fail("no classes");
  if (seconds_since(t) > 300) o.fail("over 5 min");
  o.detail += o.pass ? std::to_string(classes) + " classes" : "";
  return o;
}

Outcome c10() {
  Outcome o;
  auto t = Clock::now();
  std::size_t classes = 0;
  for (int n = 2; n <= 5; ++n) {
    GroupTable h = build_family({DihedralSpec{n}});
    for (const auto& e : enumerate_haar(h)) {
      ++classes;
      if (e.certificate.verdict != Verdict::Cayley || !e.verified)
        o.fail("D_" + std::to_string(2 * n) + " mask class is " + to_string(e.certificate.verdict));
    }
  }
  if (seconds_since(t) > 300) o.fail("over 5 min");
  if (o.pass) o.detail = std::to_string(classes) + " classes";
  return o;
}

struct Sample {
  const GroupTable* h;
  const std::vector<GroupAutomorphism>* aut;
  std::string name;
};

/// Catalog groups with their automorphism groups, built once.
class Pool {
public:
  explicit Pool(std::size_t max_order) {
    for (const auto& c : group_catalog(max_order)) {
      tables_.push_back(std::make_unique<GroupTable>(build_family(c.spec)));
      auts_.push_back(std::make_unique<std::vector<GroupAutomorphism>>(automorphism_group_of_group(*tables_.back())));
      names_.push_back(c.name);
    }
  }
  Sample pick(std::mt19937_64& rng, bool abelian_only = false) const {
    for (;;) {
      std::size_t i = rng() % tables_.size();
      if (!abelian_only || is_abelian(*tables_[i])) return {tables_[i].get(), auts_[i].get(), names_[i]};
    }
  }

private:
  std::vector<std::unique_ptr<GroupTable>> tables_;
  std::vector<std::unique_ptr<std::vector<GroupAutomorphism>>> auts_;
  std::vector<std::string> names_;
};

ElementSet random_subset(std::mt19937_64& rng, const GroupTable& h) {
  ElementSet s(h.order());
  for (Element x = 0; x < h.order(); ++x)
    if (rng() % 2) s.insert(x);
  if (s.empty()) s.insert(kIdentity);
  return s;
}

Outcome c11(const Pool& pool) {
  Outcome o;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto smp = pool.pick(rng);
    const GroupTable& h = *smp.h;
    ElementSet s = random_subset(rng, h);
    Graph g = haar_graph(h, s).graph;
    std::string tag = smp.name + " sample " + std::to_string(t);
    for (const auto& r : right_translation_generators(h))
      if (!is_graph_automorphism(g, r)) o.fail(tag + ": R(H) not in Aut");
    for (const auto& f : compute_F(h, s, smp.aut))
      if (!is_graph_automorphism(g, f.perm)) o.fail(tag + ": sigma map not an automorphism");
    auto in = compute_I(h, s, smp.aut);
    for (const auto& d : in)
      if (!is_graph_automorphism(g, d.perm)) o.fail(tag + ": delta map not an automorphism");
    if (!in.empty()) {
      auto gens = right_translation_generators(h);
      gens.push_back(in.front().perm);
      if (!PermGroup(2 * h.order(), gens).is_transitive()) o.fail(tag + ": <R(H), delta> intransitive");
    }
  }
  return o;
}

Outcome c12(const Pool& pool) {
  Outcome o;
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto smp = pool.pick(rng, true);
    const GroupTable& h = *smp.h;
    ElementSet s = random_subset(rng, h);
    std::string tag = smp.name + " sample " + std::to_string(t);
    if (compute_I(h, s, smp.aut).empty()) o.fail(tag + ": I is empty");
    auto cert = cayley_certificate_via_delta(h, s, smp.aut);
    if (!cert) {
      o.fail(tag + ": no delta certificate");
      continue;
    }
    Graph g = haar_graph(h, s).graph;
    Certificate c;
    c.verdict = Verdict::Cayley;
    c.method = "delta";
    c.regular_generators = cert->group.generators();
    if (!verify_certificate(g, c)) o.fail(tag + ": certificate does not verify");
  }
  return o;
}

Outcome c13(const Pool& pool) {
  Outcome o;
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    auto smp = pool.pick(rng);
    const GroupTable& h = *smp.h;
    std::vector<Perm> gens;
    for (Element x : generating_sequence(h)) gens.push_back(right_translation_on(h, x));
    for (std::size_t k = rng() % 3; k > 0; --k) {
      const auto& a = (*smp.aut)[rng() % smp.aut->size()];
      gens.emplace_back(std::vector<Point>(a.images.begin(), a.images.end()));
    }
    auto rep = module_law_suite(h, PermGroup(h.order(), gens));
    for (const auto& l : rep.laws)
      if (!l.pass) o.fail(smp.name + ": " + l.law + " fails at " + l.counterexample);

    std::vector<long long> a(h.order()), b(h.order());
    std::vector<std::int64_t> a64(h.order()), b64(h.order());
    for (Element x = 0; x < h.order(); ++x) {
      a[x] = a64[x] = static_cast<long long>(rng() % 11) - 5;
      b[x] = b64[x] = static_cast<long long>(rng() % 11) - 5;
    }
    auto want = oracle::convolution(h, a, b);
    auto got = convolution(GroupRingVector(h, a64), GroupRingVector(h, b64));
    for (Element x = 0; x < h.order(); ++x)
      if (got[x] != want[x]) o.fail(smp.name + ": convolution mismatch");
  }
  return o;
}

Outcome c14() {
  Outcome o;
  std::mt19937_64 rng(14);
  int done = 0;
  while (done < 20) {
    Graph g = oracle::random_graph(rng, 3 + rng() % 4);
    if (!oracle::distinct_neighbourhoods(g)) continue;
    ++done;
    BigInt base = automorphism_group(g).group.order();
    for (unsigned n : {2u, 3u}) {
      BigInt want = base;
      for (std::size_t v = 0; v < g.n(); ++v) want *= oracle::factorial(n);
      BigInt got = automorphism_group(lex_product(g, empty_graph(n))).group.order();
      if (got != want) o.fail("graph " + std::to_string(done) + ", n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome c15() {
  Outcome o;
  std::mt19937_64 rng(15);
  std::vector<Graph> graphs{cycle_graph(5), cycle_graph(8), complete_graph(6), empty_graph(4), complete_bipartite(3, 4),
                            complete_bipartite(4, 4)};
  // Haar graphs of groups of order <= 4, as built in tests.
  for (const auto& c : group_catalog(4)) {
    GroupTable h = build_family(c.spec);
    for (std::uint32_t mask = 0; mask < (1u << h.order()); ++mask) {
      ElementSet s(h.order());
      for (Element x = 0; x < h.order(); ++x)
        if (mask >> x & 1) s.insert(x);
      graphs.push_back(haar_graph(h, s).graph);
    }
  }
  for (int t = 0; t < 60; ++t) graphs.push_back(oracle::random_graph(rng, 1 + rng() % 8, 0.15 + 0.1 * (t % 8)));
  std::size_t bad = 0;
  for (const auto& g : graphs)
    if (oracle::group_elements(automorphism_group(g).group) != oracle::graph_automorphisms(g)) ++bad;
  if (bad) o.fail(std::to_string(bad) + " graphs disagree with brute force");
  for (const auto& c : group_catalog(16)) {
    GroupTable h = build_family(c.spec);
    if (is_inner_abelian(h) != oracle::inner_abelian(h)) o.fail("inner abelian mismatch for " + c.name);
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

}  // namespace

int main() {
  Pool pool(24);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 M_3(1,1,1) Haar graph not vertex-transitive", c1},
      {"2 M_2(2,1,1) Haar graph not vertex-transitive", c2},
      {"3 M_2(2,2) and M_2(2,2,1) Haar graphs not vertex-transitive", c3},
      {"4 D_2p Haar graphs not vertex-transitive, p = 7, 11, 13", c4},
      {"5 Z_p:Z_4 Haar graphs not vertex-transitive, p = 3, 5", c5},
      {"6 A4 Haar graph not vertex-transitive with no fixing translate", c6},
      {"7 Z_2^3:Z_7 Haar graph not vertex-transitive", c7},
      {"8 Z_2^4:Z_5 Haar graph not vertex-transitive", c8},
      {"9 Q8 connected Haar graphs all Cayley", c9},
      {"10 D_2n Haar graphs all Cayley, n = 2..5", c10},
      {"11 bi-Cayley structure on 200 random samples", [&] { return c11(pool); }},
      {"12 abelian Haar graphs Cayley on 100 random samples", [&] { return c12(pool); }},
      {"13 transitivity module laws on 50 random overgroups", [&] { return c13(pool); }},
      {"14 lexicographic product automorphism count", c14},
      {"15 brute-force oracle agreement", c15},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (o.pass ? "PASS " : "FAIL ") << "[" << name << "] " << static_cast<long>(seconds_since(t) * 1000) << " ms";
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (15 - failed) << "/15 criteria pass\n";
  return failed ? 1 : 0;
}
