#include <doctest.h>

#include <random>
#include <sstream>

#include "haarcay/automorphism.hpp"
#include "haarcay/catalog.hpp"
#include "haarcay/error.hpp"
#include "haarcay/serialize.hpp"
#include "haarcay/words.hpp"

using namespace haarcay;

TEST_CASE("word parsing") {
  auto d8 = build_family({DihedralSpec{4}});
  CHECK(evaluate_word(d8, "1") == kIdentity);
  CHECK(evaluate_word(d8, "e") == kIdentity);
  CHECK(evaluate_word(d8, "a4") == kIdentity);
  CHECK(evaluate_word(d8, "a-1") == evaluate_word(d8, "a^-1"));
  CHECK(evaluate_word(d8, "A") == evaluate_word(d8, "a3"));
  CHECK(evaluate_word(d8, "bab") == evaluate_word(d8, "a-1"));
  CHECK(parse_word_set(d8, "").empty());
  CHECK(parse_word_set(d8, "1, a ,b").size() == 3);
  CHECK_THROWS_AS(parse_word_set(d8, "a,,b"), PreconditionError);
  CHECK_THROWS_AS(evaluate_word(d8, "q"), PreconditionError);
  for (Element x = 0; x < 8; ++x) CHECK(evaluate_word(d8, word_for(d8, x)) == x);
}

TEST_CASE("family JSON") {
  auto spec = family_from_json(Json::parse(R"({"family":"MpMN","p":2,"m":3,"n":1})"));
  CHECK(build_family(spec).order() == 16);
  for (const char* s : {R"({"family":"z","n":6})", R"({"family":"Dihedral","n":5})", R"({"family":"q8"})",
                        R"({"family":"mm","p":3,"n":1,"q":2,"m":2})",
                        R"({"family":"product","factors":[{"family":"cyclic","n":2},{"family":"q8"}]})",
                        R"({"family":"presented","ngens":2,"relators":["aaa","bb","BabA"]})"}) {
    auto f = family_from_json(Json::parse(s));
    auto back = family_from_json(family_to_json(f));
    CHECK(build_family(f) == build_family(back));
  }
  CHECK_THROWS_AS(build_family(family_from_json(Json::parse(R"({"family":"mpmn","p":3,"m":1,"n":1})"))),
                  PreconditionError);
  CHECK_THROWS(family_from_json(Json::parse(R"({"family":"nonsense"})")));
  auto j = group_to_json(build_family({CyclicSpec{3}}));
  CHECK(j["order"] == 3);
  CHECK(j["mult"].size() == 3);
}

TEST_CASE("quotient obstruction") {
  auto h = build_family({MpmnSpec{2, 3, 2}});
  auto n = subgroup_generated(h, parse_word_set(h, "b2"));
  auto q = quotient(h, n);
  auto r = check_quotient_obstruction(h, n, parse_word_set(q.group, "1,a,a-1,b,ab"));
  CHECK(r.condition_i());
  CHECK(r.condition_ii());
  CHECK(r.blowup_isomorphic);
  CHECK(r.conclusion() == "H not in BC");
  auto full = check_quotient_obstruction(h, n, ElementSet::all(q.group.order()));
  CHECK_FALSE(full.obstructed());
  CHECK(full.conclusion() == "inconclusive");
  auto d8 = build_family({DihedralSpec{4}});
  auto notnormal = subgroup_generated(d8, parse_word_set(d8, "b"));
  CHECK_THROWS_AS(check_quotient_obstruction(d8, notnormal, ElementSet(4)), PreconditionError);
}

TEST_CASE("enumeration") {
  auto z1 = build_family({CyclicSpec{1}});
  auto e = enumerate_haar(z1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].certificate.verdict == Verdict::Cayley);
  CHECK(haar_graph(z1, e[0].s).graph == complete_graph(2));

  auto d6 = build_family({DihedralSpec{3}});
  for (const auto& x : enumerate_haar(d6)) {
    CHECK(x.certificate.verdict == Verdict::Cayley);
    CHECK(x.verified);
  }
  std::size_t total = 0;
  for (const auto& x : enumerate_haar(d6)) total += x.class_size;
  CHECK(total == 32);

  EnumerateOptions conn;
  conn.connected_only = true;
  auto q = build_family({QuaternionSpec{}});
  for (const auto& x : enumerate_haar(q, conn)) {
    CHECK(x.certificate.verdict != Verdict::NonCayley);
    CHECK(is_connected(haar_graph(q, x.s).graph));
  }
  EnumerateOptions cap;
  cap.max_order = 4;
  CHECK_THROWS_AS(enumerate_haar(q, cap), CapExceeded);
}

TEST_CASE("dedupe classes are sound") {
  std::mt19937_64 rng(17);
  for (const auto* name : {"D8", "Q8", "Z2xZ4"}) {
    GroupTable h = std::string(name) == "D8"   ? build_family({DihedralSpec{4}})
                   : std::string(name) == "Q8" ? build_family({QuaternionSpec{}})
                                               : build_family({DirectProductSpec{{{CyclicSpec{2}}, {CyclicSpec{4}}}}});
    auto cls = haar_classes(h);
    int tested = 0;
    while (tested < 20) {
      std::uint32_t mask = rng() % cls.representative.size();
      std::uint32_t rep = cls.representative[mask];
      if (rep == mask) continue;
      ++tested;
      CHECK_MESSAGE(are_isomorphic(haar_graph(h, subset_from_mask(h, mask)).graph,
                                   haar_graph(h, subset_from_mask(h, rep)).graph),
                    name << " mask " << mask);
    }
  }
}

TEST_CASE("inner abelian scan") {
  auto scan = inner_abelian_scan(24);
  std::set<std::string> found;
  for (const auto& e : scan) {
    CHECK_MESSAGE(e.inner_abelian == e.listed, e.name);
    if (e.inner_abelian) found.insert(e.name);
  }
  CHECK(found.size() >= 5);
  CHECK(in_redei_miller_moreno_list(build_family({QuaternionSpec{}})));
  CHECK_FALSE(in_redei_miller_moreno_list(build_family({DihedralSpec{6}})));
}

TEST_CASE("reproduction cases") {
  CHECK_THROWS_AS(find_case("no-such-case"), PreconditionError);
  const auto& cat = case_catalog();
  CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  auto r = reproduce("d14-not-vt");
  CHECK(r.pass);
  CHECK(r.verdict == "NonCayley");
  auto j = report_to_json(r);
  for (const char* k : {"case_id", "verdict", "expected", "pass", "certificate", "nodes_explored", "millis"})
    CHECK(j.contains(k));

  std::vector<CaseSpec> some{find_case("m3111-not-vt"), find_case("d6-all-cayley"), find_case("obstruct-m232")};
  ReproduceOptions two;
  two.threads = 2;
  auto a = reproduce_all({}, &some);
  auto b = reproduce_all(two, &some);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ja = report_to_json(a[i]), jb = report_to_json(b[i]);
    ja.erase("millis");
    jb.erase("millis");
    CHECK(ja.dump() == jb.dump());
  }
}
