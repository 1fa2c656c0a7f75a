#include <doctest.h>

#include <random>

#include "haarcay/automorphism.hpp"
#include "haarcay/cayley.hpp"
#include "haarcay/error.hpp"
#include "haarcay/families.hpp"
#include "haarcay/words.hpp"
#include "oracles.hpp"

using namespace haarcay;

namespace {

GroupTable a4() { return build_family({PresentedSpec{3, {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"}, "xyz"}}); }

std::vector<Vertex> shuffled(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("automorphism groups of standard graphs") {
  CHECK(automorphism_group(cycle_graph(6)).group.order() == 12);
  CHECK(automorphism_group(petersen_graph()).group.order() == 120);
  CHECK(automorphism_group(complete_graph(7)).group.order() == 5040);
  CHECK(automorphism_group(empty_graph(5)).group.order() == 120);
  CHECK(automorphism_group(Graph(0)).group.order() == 1);
  auto h = a4();
  auto g = haar_graph(h, parse_word_set(h, "1,x,z,xyz")).graph;
  CHECK(automorphism_group(g).group.orbits().size() > 1);
}

TEST_CASE("IR agrees with brute force on small graphs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 7, 0.2 + 0.6 * (rng() % 3) / 2.0);
    auto r = automorphism_group(g);
    for (const auto& p : r.group.generators()) CHECK(is_graph_automorphism(g, p));
    CHECK(oracle::group_elements(r.group) == oracle::graph_automorphisms(g));
  }
}

TEST_CASE("vertex transitivity") {
  auto d10 = build_family({DihedralSpec{5}});
  CHECK(is_vertex_transitive(cayley_graph(d10, parse_word_set(d10, "a,a-1,b"))));
  auto m = build_family({Mpmn1Spec{3, 1, 1}});
  auto r = vertex_transitivity(haar_graph(m, parse_word_set(m, "1,a,a-1,b,ab")).graph);
  CHECK_FALSE(r.transitive);
  CHECK(r.orbits.size() >= 2);
  auto d14 = build_family({DihedralSpec{7}});
  CHECK_FALSE(is_vertex_transitive(haar_graph(d14, parse_word_set(d14, "1,a,a3,b,ab,a2b,a4b")).graph));
  CHECK(is_vertex_transitive(petersen_graph()));
}

TEST_CASE("equitable colouring") {
  auto g = disjoint_union(cycle_graph(4), complete_graph(4));
  CHECK(equitable_coloring(disjoint_union(cycle_graph(4), complete_graph(3))).classes.size() == 1);
  auto c = equitable_coloring(g);
  CHECK(is_equitable(g, c));
  CHECK(c.classes.size() == 2);
}

TEST_CASE("canonical forms and isomorphism") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_graph(rng, 4 + rng() % 10);
    auto c = canonical_form(g);
    for (int k = 0; k < 50; ++k) CHECK(canonical_form(relabel(g, shuffled(rng, g.n()))).graph == c.graph);
  }
  auto p = petersen_graph();
  CHECK(are_isomorphic(p, p));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
  auto q = build_family({QuaternionSpec{}});
  Graph k88m = complete_bipartite(8, 8);
  Graph minus(16);
  for (auto [u, v] : k88m.edges())
    if (v != u + 8) minus.add_edge(u, v);
  for (Element drop = 1; drop < 8; ++drop) {
    ElementSet s = ElementSet::all(8);
    s.erase(drop);
    auto g = haar_graph(q, s).graph;
    auto iso = find_graph_isomorphism(g, minus);
    REQUIRE(iso);
    CHECK(relabel(g, *iso) == minus);
  }
}

TEST_CASE("budget exhaustion is reported") {
  IROptions tiny;
  tiny.node_budget = 2;
  CHECK_THROWS_AS(automorphism_group(petersen_graph(), tiny), BudgetExhausted);
}

TEST_CASE("regular subgroup search") {
  auto r = regular_subgroup_search(automorphism_group(cycle_graph(6)).group);
  REQUIRE(r.outcome == SearchOutcome::Found);
  PermGroup k(6, r.generators);
  CHECK(k.is_regular());
  CHECK(k.order() == 6);
  CHECK(regular_subgroup_search(PermGroup(4, {Perm({1, 0, 2, 3})})).outcome == SearchOutcome::None);
  CHECK(regular_subgroup_search(automorphism_group(petersen_graph()).group).outcome == SearchOutcome::None);
  RegularSearchOptions tiny;
  tiny.budget = 3;
  CHECK(regular_subgroup_search(automorphism_group(petersen_graph()).group, tiny).outcome ==
        SearchOutcome::Exhausted);
}

TEST_CASE("cayley status") {
  auto d10 = build_family({DihedralSpec{5}});
  auto cay = cayley_graph(d10, parse_word_set(d10, "a,a-1,b"));
  auto c = cayley_status(cay);
  CHECK(c.verdict == Verdict::Cayley);
  CHECK(verify_certificate(cay, c));
  StatusHints hint;
  hint.cayley = CayleyHint{&d10};
  auto c2 = cayley_status(cay, hint);
  CHECK(c2.method == "cayley-provenance");
  CHECK(verify_certificate(cay, c2));

  auto pc = cayley_status(petersen_graph());
  CHECK(pc.verdict == Verdict::NonCayley);
  CHECK(pc.method == "exhausted");
  CHECK(verify_certificate(petersen_graph(), pc));

  auto h = build_family({PresentedSpec{4,
                                       {"xx", "yy", "zz", "uuuuuuu", "XYxy", "XZxz", "YZyz", "UxuY", "UyuZ", "UzuYX"},
                                       "xyzu"}});
  auto s = parse_word_set(h, "1,x,u,xyu,xzu");
  auto g = haar_graph(h, s).graph;
  auto nc = cayley_status(g);
  CHECK(nc.verdict == Verdict::NonCayley);
  CHECK(nc.method == "intransitive");
  CHECK(verify_certificate(g, nc));

  StatusOptions broke;
  broke.ir.node_budget = 1;
  CHECK(cayley_status(petersen_graph(), {}, broke).verdict == Verdict::Unknown);
}

TEST_CASE("cayley status is stable under relabelling") {
  std::mt19937_64 rng(8);
  auto q = build_family({QuaternionSpec{}});
  auto d8 = build_family({DihedralSpec{4}});
  std::vector<Graph> graphs{petersen_graph(), cycle_graph(7), haar_graph(q, parse_word_set(q, "1,i,j")).graph,
                            haar_graph(d8, parse_word_set(d8, "1,a,b")).graph};
  for (const auto& g : graphs) {
    auto v = cayley_status(g).verdict;
    for (int k = 0; k < 3; ++k) CHECK(cayley_status(relabel(g, shuffled(rng, g.n()))).verdict == v);
  }
}
