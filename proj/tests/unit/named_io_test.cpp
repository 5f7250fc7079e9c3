#include <gtest/gtest.h>

#include <set>

#include "kschmidt/io.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/named.hpp"
#include "kschmidt/report.hpp"
#include "kschmidt/verify/sweeps.hpp"
#include "support.hpp"

namespace kschmidt {
namespace {

using test::kind_of;
using test::named;

TEST(Named, Examples) {
  const auto c6 = named("cyclic:6");
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_TRUE(c6.is_abelian());
  const auto d4 = named("dihedral:4");
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_EQ(test::order_histogram(d4)[2], 5u);
  EXPECT_EQ(named("direct_product(cyclic:2,symmetric:3)").order(), 12u);
  EXPECT_EQ(named("quaternion").order(), 8u);
  EXPECT_EQ(named("quaternion:8").order(), 8u);
  EXPECT_EQ(named("symmetric:4").order(), 24u);
  EXPECT_EQ(named("elementary_abelian:3:2").order(), 9u);
  EXPECT_TRUE(named("trivial").is_trivial());
  EXPECT_EQ(named("direct_product(cyclic:2,cyclic:3,cyclic:5)").order(), 30u);
  EXPECT_EQ(named(" direct_product( cyclic:2 , dihedral:3 ) ").order(), 12u);
}

TEST(Named, Layouts) {
  // dihedral: r^i at i, r^i s at n+i
  const auto d5 = named("dihedral:5");
  EXPECT_EQ(d5.element_order(1), 5u);
  for (Element x = 5; x < 10; ++x) EXPECT_EQ(d5.element_order(x), 2u);
  // symmetric:3 is isomorphic to dihedral:3
  EXPECT_TRUE(are_isomorphic(named("symmetric:3"), named("dihedral:3")));
  // quaternion: -1 at 1
  const auto q8 = named("quaternion");
  EXPECT_EQ(q8.element_order(1), 2u);
  EXPECT_EQ(center(q8).order(), 2u);
}

TEST(Named, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_named("cyclc:4"); }), ErrorKind::kUnknownName);
  EXPECT_EQ(kind_of([] { parse_named("cyclic"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { parse_named("cyclic:x"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { parse_named("cyclic:4:4"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { parse_named("direct_product(cyclic:2"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { named_group("cyclic:0"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { named_group("dihedral:0"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { named_group("quaternion:16"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { named_group("elementary_abelian:4:2"); }), ErrorKind::kBadParams);
  EXPECT_EQ(kind_of([] { named_group("symmetric:9"); }), ErrorKind::kOrderBudgetExceeded);
  EXPECT_EQ(kind_of([] { named_group("cyclic:1000000"); }), ErrorKind::kOrderBudgetExceeded);
}

TEST(Named, RoundTrip) {
  for (const char* spec : {"cyclic:6", "direct_product(cyclic:2,symmetric:3)", "elementary_abelian:2:3", "trivial"}) {
    const auto parsed = parse_named(spec);
    EXPECT_EQ(parse_named(parsed.to_string()), parsed);
    EXPECT_EQ(named_order(parsed), named_group(parsed).order());
  }
}

TEST(Corpus, Composition) {
  const auto c = corpus(16);
  std::set<std::string> names;
  for (const auto& e : c) {
    EXPECT_LE(e.order, 16u);
    EXPECT_TRUE(names.insert(e.spec.to_string()).second) << e.spec.to_string();
  }
  for (const char* want : {"trivial", "cyclic:16", "quaternion", "dihedral:8", "symmetric:3", "elementary_abelian:2:4",
                           "direct_product(cyclic:2,symmetric:3)"}) {
    EXPECT_TRUE(names.count(parse_named(want).to_string())) << want;
  }
  EXPECT_FALSE(names.count("symmetric:4"));
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.order < b.order; }));
  bool has_s4 = false;
  for (const auto& e : corpus_bases(24)) has_s4 |= e.spec.to_string() == "symmetric:4";
  EXPECT_TRUE(has_s4);
}

TEST(Io, GroupFormats) {
  const auto cayley = Json::parse(R"({"format":"cayley-v1","order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]})");
  EXPECT_EQ(group_from_json(cayley).order(), 3u);
  const auto perm = Json::parse(R"({"format":"perm-v1","degree":3,"generators":[[1,0,2],[0,2,1]]})");
  EXPECT_EQ(group_from_json(perm).order(), 6u);
  EXPECT_EQ(group_from_json(Json("dihedral:4")).order(), 8u);
  const auto s3 = named("symmetric:3");
  EXPECT_EQ(group_from_json(to_json(s3)), s3);
}

TEST(Io, GroupErrors) {
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"nope"})")); }), ErrorKind::kBadInput);
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"cayley-v1"})")); }), ErrorKind::kBadInput);
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"cayley-v1","table":"x"})")); }),
            ErrorKind::kBadInput);
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"cayley-v1","order":3,"table":[[0,1],[1,0]]})")); }),
            ErrorKind::kBadInput);
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"cayley-v1","table":[[0,1],[1,1]]})")); }),
            ErrorKind::kNotAGroup);
  EXPECT_EQ(kind_of([] { group_from_json(Json::parse(R"({"format":"cayley-v1","table":[[0,-1],[1,0]]})")); }),
            ErrorKind::kNotAGroup);
  EXPECT_EQ(kind_of([] { group_from_json(Json(42)); }), ErrorKind::kBadInput);
  EXPECT_EQ(kind_of([] { read_json_file("/nonexistent/file.json"); }), ErrorKind::kBadInput);
}

TEST(Io, TowerRoundTrip) {
  const std::uint64_t m[] = {2, 4, 8};
  const auto t = verify::cyclic_tower(m);
  const auto back = tower_from_json(to_json(t));
  ASSERT_EQ(back.depth(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back.level(k), t.level(k));
  EXPECT_EQ(back.maps()[1], t.maps()[1]);
  const auto named_levels =
      Json::parse(R"({"format":"tower-v1","levels":["cyclic:2","cyclic:4"],"maps":[[0,1,0,1]]})");
  EXPECT_TRUE(validate_tower(tower_from_json(named_levels)).valid);
  EXPECT_EQ(kind_of([] { tower_from_json(Json::parse(R"({"format":"tower-v1","levels":[],"maps":[]})")); }),
            ErrorKind::kBadInput);
}

TEST(Io, FiberSpec) {
  const auto doc = Json::parse(
      R"({"format":"fiber-power-v1","group":"cyclic:4","g0":[0,2],"copies":1})");
  const auto spec = fiber_power_spec_from_json(doc);
  EXPECT_EQ(spec.g0.order(), 2u);
  EXPECT_TRUE(spec.m0.is_trivial());
  EXPECT_TRUE(spec.kernel.is_trivial());
  EXPECT_EQ(fiber_power(spec).group.order(), 8u);
  const auto back = fiber_power_spec_from_json(to_json(spec));
  EXPECT_EQ(back.g0, spec.g0);
  EXPECT_EQ(kind_of([] {
              fiber_power_spec_from_json(Json::parse(R"({"format":"fiber-power-v1","group":"symmetric:3","g0":[0,1],"copies":1})"));
            }),
            ErrorKind::kNotNormal);
}

TEST(Io, DigestAndReport) {
  const auto a = named("cyclic:6");
  EXPECT_EQ(digest(a), digest(named("cyclic:6")));
  EXPECT_NE(digest(a), digest(named("symmetric:3")));
  EXPECT_EQ(digest(a).size(), 16u);
  Report r;
  r.command = "x";
  r.add_input(a, "A");
  r.result = Json{{"b", 1}, {"a", 2}};
  const auto j = r.to_json();
  EXPECT_EQ(j.at("inputs").at(0).at("label"), "A");
  EXPECT_EQ(r.dump(), r.dump());
  EXPECT_EQ(describe(fingerprint(a)).rfind("order 6", 0), 0u);
}

}  // namespace
}  // namespace kschmidt
