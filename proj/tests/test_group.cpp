#include <doctest.h>

#include <random>

#include "haarcay/catalog.hpp"
#include "haarcay/error.hpp"
#include "haarcay/families.hpp"
#include "haarcay/group.hpp"
#include "haarcay/words.hpp"
#include "oracles.hpp"

using namespace haarcay;

namespace {

GroupTable a4() { return build_family({PresentedSpec{3, {"xx", "yy", "zzz", "XYxy", "Zxzy", "ZyzXY"}, "xyz"}}); }

Element gen(const GroupTable& h, const char* l) { return *h.generator(l); }

}  // namespace

TEST_CASE("family orders and basic shape") {
  auto d6 = build_family({DihedralSpec{3}});
  CHECK(d6.order() == 6);
  CHECK_FALSE(is_abelian(d6));

  CHECK(build_family({MpmnSpec{3, 2, 1}}).order() == 27);
  CHECK(build_family({MpmnSpec{2, 3, 2}}).order() == 32);
  CHECK(build_family({Mpmn1Spec{3, 1, 1}}).order() == 27);
  CHECK(build_family({Mpmn1Spec{2, 2, 2}}).order() == 32);
  CHECK(build_family({MillerMorenoSpec{2, 2, 3, 2, std::nullopt}}).order() == 36);
  CHECK(build_family({MillerMorenoSpec{5, 1, 2, 3, std::nullopt}}).order() == 40);
  CHECK(build_family({QuaternionSpec{}}).order() == 8);
  CHECK(a4().order() == 12);
}

TEST_CASE("M_2(2,1) is dihedral of order 8") {
  auto m = build_family({MpmnSpec{2, 2, 1}});
  CHECK(m.order() == 8);
  CHECK(are_isomorphic(m, build_family({DihedralSpec{4}})));
  CHECK_FALSE(are_isomorphic(m, build_family({QuaternionSpec{}})));
}

TEST_CASE("Z_2^2 : Z_3 is the presented A4") {
  auto mm = build_family({MillerMorenoSpec{2, 2, 3, 1, std::nullopt}});
  CHECK(mm.order() == 12);
  CHECK(are_isomorphic(mm, a4()));
}

TEST_CASE("M_p relations hold on the named generators") {
  for (auto [p, m, n] : {std::tuple{2, 2, 1}, {2, 3, 2}, {3, 2, 1}, {5, 2, 1}}) {
    auto h = build_family({MpmnSpec{p, m, n}});
    Element a = gen(h, "a"), b = gen(h, "b"), c = gen(h, "c");
    long long pm = 1, pn = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    for (int i = 0; i < n; ++i) pn *= p;
    CHECK(h.element_order(a) == static_cast<std::size_t>(pm));
    CHECK(h.element_order(b) == static_cast<std::size_t>(pn));
    CHECK(h.commutator(a, b) == c);
    CHECK(c == h.pow(a, pm / p));
    auto ab = ElementSet(h.order(), {a, b});
    CHECK(subgroup_generated(h, ab).size() == h.order());
  }
  for (auto [p, m, n] : {std::tuple{3, 1, 1}, {2, 2, 1}, {2, 3, 2}}) {
    auto h = build_family({Mpmn1Spec{p, m, n}});
    Element a = gen(h, "a"), b = gen(h, "b"), c = gen(h, "c");
    CHECK(h.commutator(a, b) == c);
    CHECK(h.element_order(c) == static_cast<std::size_t>(p));
    CHECK(center(h).contains(c));
    CHECK(h.mul(a, b) == h.mul(h.mul(b, a), c));
  }
}

TEST_CASE("element orders") {
  auto q = build_family({QuaternionSpec{}});
  auto z = center(q);
  for (Element x = 0; x < 8; ++x)
    if (!z.contains(x)) CHECK(q.element_order(x) == 4);
  CHECK(multiply(q, kIdentity, 5) == 5);
  CHECK(multiply(q, 5, inverse(q, 5)) == kIdentity);

  auto m = build_family({Mpmn1Spec{3, 1, 1}});
  CHECK(element_order(m, gen(m, "b")) == 3);
}

TEST_CASE("subgroup generation") {
  auto q = build_family({QuaternionSpec{}});
  CHECK(subgroup_generated(q, ElementSet(8)).elements() == std::vector<Element>{kIdentity});
  CHECK(subgroup_generated(q, ElementSet(8, {gen(q, "i")})).size() == 4);
  for (const auto& g : group_catalog(24)) {
    auto h = build_family(g.spec);
    ElementSet s(h.order());
    for (const auto& x : h.gens()) s.insert(x.element);
    CHECK_MESSAGE(subgroup_generated(h, s).size() == h.order(), g.name);
  }
}

TEST_CASE("centre and normality") {
  auto q = build_family({QuaternionSpec{}});
  CHECK(center(q).size() == 2);
  for (const auto& g : group_catalog(20)) {
    auto h = build_family(g.spec);
    CHECK(is_normal(h, center(h)));
  }
  auto d8 = build_family({DihedralSpec{4}});
  auto b = ElementSet(8, {gen(d8, "b")});
  CHECK_FALSE(is_normal(d8, subgroup_generated(d8, b)));
  CHECK_THROWS_AS(is_normal(d8, ElementSet(8, {0, gen(d8, "a")})), PreconditionError);
}

TEST_CASE("quotients") {
  auto q = build_family({QuaternionSpec{}});
  auto whole = quotient(q, ElementSet::all(8));
  CHECK(whole.group.order() == 1);
  auto same = quotient(q, ElementSet(8, {0}));
  CHECK(same.group.order() == 8);
  for (Element x = 0; x < 8; ++x) CHECK(same.projection[x] == x);

  auto h = build_family({MpmnSpec{2, 3, 2}});
  auto n = subgroup_generated(h, parse_word_set(h, "b2"));
  auto qt = quotient(h, n);
  CHECK(qt.group.order() == 16);
  CHECK(are_isomorphic(qt.group, build_family({MpmnSpec{2, 3, 1}})));
  Element a = *qt.group.generator("a"), b = *qt.group.generator("b");
  CHECK(qt.group.element_order(a) == 8);
  CHECK(qt.group.element_order(b) == 2);
  CHECK(qt.group.commutator(a, b) == qt.group.pow(a, 4));
  for (Element x = 0; x < h.order(); ++x)
    for (Element y = 0; y < h.order(); ++y)
      CHECK(qt.projection[h.mul(x, y)] == qt.group.mul(qt.projection[x], qt.projection[y]));

  auto mm = build_family({MillerMorenoSpec{5, 1, 2, 3, std::nullopt}});
  auto qm = quotient(mm, subgroup_generated(mm, parse_word_set(mm, "b4")));
  CHECK(qm.group.order() == 20);
  CHECK(are_isomorphic(qm.group, build_family({MillerMorenoSpec{5, 1, 2, 2, std::nullopt}})));
  CHECK_THROWS_AS(quotient(build_family({DihedralSpec{4}}), ElementSet(8, {0, 1})), PreconditionError);
}

TEST_CASE("group automorphisms") {
  CHECK(automorphism_group_of_group(build_family({CyclicSpec{5}})).size() == 4);
  auto q = build_family({QuaternionSpec{}});
  auto aq = automorphism_group_of_group(q);
  CHECK(aq.size() == 24);
  std::set<std::vector<Element>> mine;
  for (const auto& a : aq) mine.insert(a.images);
  CHECK(mine == oracle::group_automorphisms(q));

  DirectProductSpec v4;
  v4.factors = {FamilySpec{CyclicSpec{2}}, FamilySpec{CyclicSpec{2}}};
  CHECK(automorphism_group_of_group(build_family({v4})).size() == 6);

  for (const auto& g : group_catalog(8)) {
    auto h = build_family(g.spec);
    auto auts = automorphism_group_of_group(h);
    std::set<GroupAutomorphism> set(auts.begin(), auts.end());
    CHECK(auts.front().is_identity());
    for (const auto& x : auts)
      for (const auto& y : auts) CHECK(set.count(x.then(y)));
    std::set<std::vector<Element>> imgs;
    for (const auto& a : auts) imgs.insert(a.images);
    CHECK_MESSAGE(imgs == oracle::group_automorphisms(h), g.name);
  }
  CHECK_THROWS_AS(automorphism_group_of_group(build_family({CyclicSpec{300}})), CapExceeded);
}

TEST_CASE("inner automorphisms") {
  auto q = build_family({QuaternionSpec{}});
  CHECK(inner_automorphism(q, kIdentity).is_identity());
  auto z6 = build_family({CyclicSpec{6}});
  for (Element y = 0; y < 6; ++y) CHECK(inner_automorphism(z6, y).is_identity());
  auto m = build_family({Mpmn1Spec{3, 1, 1}});
  Element a = gen(m, "a"), b = gen(m, "b"), c = gen(m, "c");
  CHECK(inner_automorphism(m, b)(a) == m.mul(a, c));
  CHECK(is_automorphism(m, inner_automorphism(m, a).images));
}

TEST_CASE("isomorphism search") {
  auto z4 = build_family({CyclicSpec{4}});
  DirectProductSpec v4;
  v4.factors = {FamilySpec{CyclicSpec{2}}, FamilySpec{CyclicSpec{2}}};
  CHECK_FALSE(are_isomorphic(z4, build_family({v4})));
  DirectProductSpec z23;
  z23.factors = {FamilySpec{CyclicSpec{2}}, FamilySpec{CyclicSpec{3}}};
  auto h = build_family({z23});
  auto iso = find_isomorphism(h, build_family({CyclicSpec{6}}));
  REQUIRE(iso);
  auto z6 = build_family({CyclicSpec{6}});
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK((*iso)[h.mul(x, y)] == z6.mul((*iso)[x], (*iso)[y]));
}

TEST_CASE("inner abelian") {
  CHECK(is_inner_abelian(build_family({QuaternionSpec{}})));
  CHECK(is_inner_abelian(a4()));
  CHECK(is_inner_abelian(build_family({DihedralSpec{4}})));
  CHECK_FALSE(is_inner_abelian(build_family({CyclicSpec{12}})));
  CHECK_FALSE(is_inner_abelian(build_family({DihedralSpec{6}})));
  CHECK(is_inner_abelian(build_family({Mpmn1Spec{3, 1, 1}})));
  for (const auto& g : group_catalog(30)) {
    auto h = build_family(g.spec);
    CHECK_MESSAGE(is_inner_abelian(h) == oracle::inner_abelian(h), g.name);
  }
}

TEST_CASE("Miller-Moreno action is fixed-point-free of order q") {
  for (auto [p, n, q, m] : {std::tuple{2, 2, 3, 1}, {2, 3, 7, 1}, {2, 4, 5, 2}, {3, 1, 2, 1}, {7, 1, 3, 1}}) {
    auto h = build_family({MillerMorenoSpec{p, n, q, m, std::nullopt}});
    Element b = gen(h, "b");
    // P = elements of p-power order
    std::vector<Element> pel;
    for (Element x = 0; x < h.order(); ++x) {
      std::size_t o = h.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) pel.push_back(x);
    }
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    CHECK(pel.size() == static_cast<std::size_t>(pn));
    for (Element x : pel) {
      if (x != kIdentity) CHECK(h.conj(x, b) != x);
      CHECK(h.conj(x, h.pow(b, q)) == x);
    }
  }
}

TEST_CASE("family constraint errors") {
  CHECK_THROWS_WITH_AS(build_family({MpmnSpec{3, 1, 1}}), doctest::Contains("m >= 2"), PreconditionError);
  CHECK_THROWS_WITH_AS(build_family({MillerMorenoSpec{2, 3, 5, 1, std::nullopt}}), doctest::Contains("q | (p^n - 1)"),
                       PreconditionError);
  CHECK_THROWS_AS(build_family({MpmnSpec{4, 2, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_family({Mpmn1Spec{2, 1, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_family({CyclicSpec{0}}), PreconditionError);
}

TEST_CASE("presentations") {
  CHECK(build_family({PresentedSpec{1, {"aaaaa"}, ""}}).order() == 5);
  auto s3 = build_family({PresentedSpec{2, {"aaa", "bb", "abab"}, "ab"}});
  CHECK(s3.order() == 6);
  CHECK(are_isomorphic(s3, build_family({DihedralSpec{3}})));
  // a^2 = 1 and a^3 = 1 collapse a
  CHECK(build_family({PresentedSpec{1, {"aa", "aaa"}, ""}}).order() == 1);
  CHECK_THROWS_AS(build_family({PresentedSpec{1, {"ab"}, ""}}), PreconditionError);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}, {}), PreconditionError);
  CHECK_THROWS_AS(GroupTable(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}, {}), PreconditionError);
  CHECK_NOTHROW(GroupTable(2, {0, 1, 1, 0}, {{"a", 1}}));
}
