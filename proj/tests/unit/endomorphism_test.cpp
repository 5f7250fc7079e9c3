#include <gtest/gtest.h>

#include "kschmidt/endomorphism.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/verify/oracles.hpp"
#include "support.hpp"

namespace kschmidt {
namespace {

using test::images;
using test::kind_of;
using test::multiply_by;
using test::named;

GroupHom inner(const FiniteGroup& g, Element c) {
  std::vector<Element> img(g.order());
  for (Element x = 0; x < g.order(); ++x) img[x] = g.conj(c, x);
  return GroupHom::verified(g, g, img);
}

TEST(NormalEndo, Basics) {
  const auto s3 = named("symmetric:3");
  EXPECT_TRUE(is_normal_endomorphism(GroupHom::identity(s3)));
  EXPECT_TRUE(is_normal_endomorphism(GroupHom::trivial(s3, s3)));
  const auto c12 = named("cyclic:12");
  for (const auto& f : enumerate_endomorphisms(c12, false)) EXPECT_TRUE(is_normal_endomorphism(f));
  const auto to_c2 = hom_from_images(named("cyclic:4"), named("cyclic:2"), {{1, 1}});
  EXPECT_EQ(kind_of([&] { is_normal_endomorphism(to_c2); }), ErrorKind::kSourceTargetMismatch);
}

TEST(NormalEndo, NonNormalOnS3) {
  const auto s3 = named("symmetric:3");
  std::size_t normal = 0, non_normal = 0, retractions = 0;
  for (const auto& f : enumerate_endomorphisms(s3, false)) {
    if (is_normal_endomorphism(f)) {
      ++normal;
      continue;
    }
    ++non_normal;
    if (f.image().order() == 2) {
      ++retractions;
      EXPECT_EQ(f.kernel().order(), 3u);
    }
  }
  EXPECT_EQ(normal, 2u);  // trivial and identity
  EXPECT_EQ(non_normal, 8u);
  EXPECT_EQ(retractions, 3u);
  // With a trivial center, conjugation by c is normal only for c = e.
  for (Element c = 1; c < 6; ++c) EXPECT_FALSE(is_normal_endomorphism(inner(s3, c)));
}

TEST(EndoSum, Examples) {
  const auto c5 = named("cyclic:5");
  const auto id5 = GroupHom::identity(c5);
  const auto doubled = endo_sum(id5, id5);
  ASSERT_TRUE(doubled);
  EXPECT_EQ(*doubled, multiply_by(c5, 2));
  EXPECT_TRUE(doubled->is_bijective());

  const auto s3 = named("symmetric:3");
  EXPECT_FALSE(endo_sum(GroupHom::identity(s3), GroupHom::identity(s3)));

  const auto c6 = named("direct_product(cyclic:2,cyclic:3)");
  const auto d = InternalDecomposition::verified(
      c6, {NormalSubgroup::verified(c6, {0, 3}), NormalSubgroup::verified(c6, {0, 1, 2})});
  const auto sum = endo_sum(d.idempotent(0), d.idempotent(1));
  ASSERT_TRUE(sum);
  EXPECT_TRUE(sum->is_identity());
}

TEST(Enumerate, CountsAgreeWithOracle) {
  EXPECT_EQ(enumerate_endomorphisms(named("cyclic:2"), false).size(), 2u);
  const auto c4 = enumerate_endomorphisms(named("cyclic:4"), false);
  ASSERT_EQ(c4.size(), 4u);
  for (std::uint64_t k = 0; k < 4; ++k) EXPECT_EQ(c4[k], multiply_by(named("cyclic:4"), k));
  const auto s3 = named("symmetric:3");
  EXPECT_EQ(enumerate_endomorphisms(s3, false).size(), 10u);
  EXPECT_EQ(oracle::endomorphisms(s3).size(), 10u);
  for (const char* spec : {"quaternion", "dihedral:4", "elementary_abelian:2:3", "direct_product(cyclic:2,cyclic:4)"}) {
    const auto g = named(spec);
    std::vector<std::vector<Element>> mine;
    for (const auto& f : enumerate_endomorphisms(g, false)) mine.push_back(images(f));
    std::sort(mine.begin(), mine.end());
    EXPECT_EQ(mine, oracle::endomorphisms(g)) << spec;
  }
}

TEST(Enumerate, Cap) {
  EXPECT_EQ(kind_of([] { enumerate_endomorphisms(named("symmetric:4"), false); }), ErrorKind::kOrderBudgetExceeded);
  Limits limits;
  limits.endo_order_cap = 24;
  EXPECT_EQ(enumerate_endomorphisms(named("symmetric:4"), true, limits).size(), 2u);
}

TEST(Fitting, Examples) {
  const auto c6 = named("cyclic:6");
  const auto a = fitting_decomposition(multiply_by(c6, 4));
  EXPECT_EQ(a.exponent, 1u);
  EXPECT_EQ(test::members(a.kernel_part), (std::vector<Element>{0, 3}));
  EXPECT_EQ(test::members(a.image_part), (std::vector<Element>{0, 2, 4}));

  const auto s3 = named("symmetric:3");
  const auto b = fitting_decomposition(GroupHom::identity(s3));
  EXPECT_EQ(b.exponent, 1u);
  EXPECT_TRUE(b.kernel_part.is_trivial());
  EXPECT_TRUE(b.image_part.is_whole());

  const auto c = fitting_decomposition(multiply_by(named("cyclic:4"), 2));
  EXPECT_EQ(c.exponent, 2u);
  EXPECT_TRUE(c.kernel_part.is_whole());
  EXPECT_TRUE(c.image_part.is_trivial());

  for (const auto& f : enumerate_endomorphisms(s3, false)) {
    if (!is_normal_endomorphism(f)) {
      EXPECT_EQ(kind_of([&] { fitting_decomposition(f); }), ErrorKind::kNotNormal);
    }
  }
}

TEST(Fitting, InternalDirectSum) {
  const auto c6 = named("cyclic:6");
  const auto two = NormalSubgroup::verified(c6, {0, 3});
  const auto three = NormalSubgroup::verified(c6, {0, 2, 4});
  EXPECT_TRUE(is_internal_direct_sum(two, three));
  EXPECT_FALSE(is_internal_direct_sum(two, two));
  EXPECT_FALSE(is_internal_direct_sum(NormalSubgroup::whole(c6), three));
}

TEST(Classify, Examples) {
  const auto c4 = named("cyclic:4");
  EXPECT_EQ(classify_normal_endo(multiply_by(c4, 3)).kind, EndoKind::kAutomorphism);
  const auto nil = classify_normal_endo(multiply_by(c4, 2));
  EXPECT_EQ(nil.kind, EndoKind::kNilpotent);
  EXPECT_EQ(nil.nilpotency_index, 2u);
  const auto zero = classify_normal_endo(GroupHom::trivial(c4, c4));
  EXPECT_EQ(zero.kind, EndoKind::kNilpotent);
  EXPECT_EQ(zero.nilpotency_index, 1u);

  const auto c6 = named("direct_product(cyclic:2,cyclic:3)");
  const auto d = InternalDecomposition::verified(
      c6, {NormalSubgroup::verified(c6, {0, 3}), NormalSubgroup::verified(c6, {0, 1, 2})});
  const auto neither = classify_normal_endo(d.idempotent(0));
  EXPECT_EQ(neither.kind, EndoKind::kNeither);
  EXPECT_FALSE(neither.nilpotency_index);
  EXPECT_EQ(endo_kind_name(EndoKind::kNeither), "Neither");
}

TEST(AutomorphicSummand, Examples) {
  const auto c4 = named("cyclic:4");
  const std::vector<GroupHom> single = {GroupHom::identity(c4)};
  EXPECT_EQ(automorphic_summand(single), 0u);
  const std::vector<GroupHom> pair = {multiply_by(c4, 2), multiply_by(c4, 3)};
  EXPECT_EQ(automorphic_summand(pair), 1u);

  const auto c6 = named("cyclic:6");
  const std::vector<GroupHom> decomposable = {multiply_by(c6, 4), multiply_by(c6, 3)};
  EXPECT_EQ(kind_of([&] { automorphic_summand(decomposable); }), ErrorKind::kPreconditionViolated);

  // sum 2x + 2x = 0 on C4 is not an automorphism
  const std::vector<GroupHom> no_auto = {multiply_by(c4, 2), multiply_by(c4, 2)};
  EXPECT_EQ(kind_of([&] { automorphic_summand(no_auto); }), ErrorKind::kPreconditionViolated);
  EXPECT_EQ(kind_of([&] { automorphic_summand(std::vector<GroupHom>{}); }), ErrorKind::kPreconditionViolated);
}

}  // namespace
}  // namespace kschmidt
