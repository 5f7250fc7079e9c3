#include <gtest/gtest.h>

#include <set>

#include "kschmidt/isomorphism.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/verify/oracles.hpp"
#include "support.hpp"

namespace kschmidt {
namespace {

using test::kind_of;
using test::members;
using test::named;

NormalSubgroup sub(const FiniteGroup& g, std::vector<Element> m) { return NormalSubgroup::verified(g, std::move(m)); }

std::vector<IsoFingerprint> sorted_fingerprints(const InternalDecomposition& d) {
  std::vector<IsoFingerprint> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(fingerprint(d.factor_group(i)));
  std::sort(out.begin(), out.end());
  return out;
}

void expect_iso(const GroupHom& f) {
  ASSERT_TRUE(f.is_bijective());
  for (Element a = 0; a < f.source().order(); ++a) {
    for (Element b = 0; b < f.source().order(); ++b) {
      ASSERT_EQ(f(f.source().mul(a, b)), f.target().mul(f(a), f(b)));
    }
  }
}

TEST(ComplementSplits, Examples) {
  const auto c6 = complement_splits(named("cyclic:6"));
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(c6[0].first.order(), 2u);
  EXPECT_EQ(c6[0].second.order(), 3u);
  EXPECT_TRUE(complement_splits(named("quaternion")).empty());
  EXPECT_EQ(complement_splits(named("elementary_abelian:2:2")).size(), 3u);
  EXPECT_TRUE(complement_splits(FiniteGroup()).empty());
}

TEST(Indecomposable, Examples) {
  EXPECT_TRUE(is_indecomposable(named("cyclic:4")));
  EXPECT_FALSE(is_indecomposable(named("cyclic:6")));
  EXPECT_TRUE(is_indecomposable(named("dihedral:4")));
  EXPECT_TRUE(is_indecomposable(named("symmetric:3")));
  EXPECT_FALSE(is_indecomposable(named("dihedral:6")));  // D6 = S3 x C2
  EXPECT_EQ(indecomposability(FiniteGroup()), Indecomposability::kTrivial);
  EXPECT_TRUE(is_indecomposable(FiniteGroup()));
  for (const char* spec : {"dihedral:6", "quaternion", "direct_product(cyclic:2,cyclic:4)", "cyclic:9"}) {
    EXPECT_EQ(is_indecomposable(named(spec)), oracle::is_indecomposable(named(spec))) << spec;
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(FiniteGroup()).size(), 0u);
  const auto c6 = decompose(named("cyclic:6"));
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_EQ(c6.factors()[0].order(), 2u);
  EXPECT_EQ(c6.factors()[1].order(), 3u);

  const auto g = named("direct_product(cyclic:2,cyclic:2,symmetric:3)");
  const auto d = decompose(g);
  const std::vector<IsoFingerprint> expected = [] {
    std::vector<IsoFingerprint> e = {fingerprint(named("cyclic:2")), fingerprint(named("cyclic:2")),
                                     fingerprint(named("symmetric:3"))};
    std::sort(e.begin(), e.end());
    return e;
  }();
  EXPECT_EQ(sorted_fingerprints(d), expected);
  // Any regrouping of C2 x S3 refines to the same multiset.
  for (const auto& other : all_decompositions(g)) EXPECT_EQ(sorted_fingerprints(other), expected);
}

TEST(AllDecompositions, Counts) {
  EXPECT_EQ(all_decompositions(named("elementary_abelian:2:2")).size(), 3u);
  EXPECT_EQ(all_decompositions(named("elementary_abelian:2:3")).size(), 28u);
  EXPECT_EQ(all_decompositions(named("cyclic:8")).size(), 1u);
  EXPECT_EQ(all_decompositions(named("cyclic:30")).size(), 1u);
  Limits limits;
  limits.search_nodes = 5;
  EXPECT_EQ(kind_of([&] { all_decompositions(named("elementary_abelian:2:3"), limits); }),
            ErrorKind::kSearchBudgetExceeded);
}

TEST(Decomposition, VerifiedRejects) {
  const auto v4 = named("elementary_abelian:2:2");
  EXPECT_EQ(kind_of([&] { InternalDecomposition::verified(v4, {sub(v4, {0, 1}), sub(v4, {0, 1})}); }),
            ErrorKind::kNotADecomposition);
  EXPECT_EQ(kind_of([&] { InternalDecomposition::verified(v4, {sub(v4, {0, 1})}); }), ErrorKind::kNotADecomposition);
  const auto d = InternalDecomposition::verified(v4, {sub(v4, {0, 3}), sub(v4, {0, 1})});
  EXPECT_EQ(d.component(2, 0), 3u);
  EXPECT_EQ(d.component(2, 1), 1u);
  EXPECT_TRUE(compose(d.projection(0), d.inclusion(0)).is_identity());
}

TEST(Match, Examples) {
  const auto s3c2 = named("direct_product(symmetric:3,cyclic:2)");
  const auto d = decompose(s3c2);
  const auto same = match_decompositions(s3c2, d, d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(same.bijection[i], i);
    expect_iso(same.witnesses[i]);
  }

  const auto v4 = named("elementary_abelian:2:2");
  const auto d1 = InternalDecomposition::verified(v4, {sub(v4, {0, 2}), sub(v4, {0, 1})});
  const auto d2 = InternalDecomposition::verified(v4, {sub(v4, {0, 3}), sub(v4, {0, 1})});
  const auto m = match_decompositions(v4, d1, d2);
  ASSERT_EQ(m.bijection.size(), 2u);
  EXPECT_NE(m.bijection[0], m.bijection[1]);
  for (const auto& w : m.witnesses) expect_iso(w);

  const auto c6 = named("cyclic:6");
  const auto canonical = InternalDecomposition::verified(c6, {sub(c6, {0, 3}), sub(c6, {0, 2, 4})});
  const auto reordered = InternalDecomposition::verified(c6, {sub(c6, {0, 2, 4}), sub(c6, {0, 3})});
  EXPECT_EQ(match_decompositions(c6, canonical, reordered).bijection, (std::vector<std::size_t>{1, 0}));

  EXPECT_EQ(kind_of([&] { match_decompositions(c6, d1, canonical); }), ErrorKind::kNotADecomposition);
}

TEST(PropertyP, Examples) {
  const auto v4 = named("elementary_abelian:2:2");
  const auto d1 = InternalDecomposition::verified(v4, {sub(v4, {0, 2}), sub(v4, {0, 1})});
  const auto d2 = InternalDecomposition::verified(v4, {sub(v4, {0, 3}), sub(v4, {0, 1})});
  const auto p = property_p_match(v4, d1, d2, 0);
  EXPECT_EQ(p.index, 0u);
  expect_iso(p.isomorphism);

  const auto c6 = named("direct_product(cyclic:2,cyclic:3)");
  const auto d = decompose(c6);
  const auto q = property_p_match(c6, d, d, 0);
  EXPECT_EQ(q.index, 0u);
  EXPECT_TRUE(q.isomorphism.is_identity());

  // sheared basis of (C2)^3, elements (a,b,c) at 4a+2b+c
  const auto e8 = named("elementary_abelian:2:3");
  const auto standard = InternalDecomposition::verified(e8, {sub(e8, {0, 4}), sub(e8, {0, 2}), sub(e8, {0, 1})});
  const auto sheared = InternalDecomposition::verified(e8, {sub(e8, {0, 6}), sub(e8, {0, 3}), sub(e8, {0, 1})});
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto r = property_p_match(e8, standard, sheared, i);
    expect_iso(r.isomorphism);
    EXPECT_EQ(fingerprint(sheared.factor_group(r.index)), fingerprint(standard.factor_group(i)));
    used.insert(r.index);
  }
  EXPECT_EQ(kind_of([&] { property_p_match(e8, standard, sheared, 3); }), ErrorKind::kPreconditionViolated);
}

TEST(Cancel, Examples) {
  {
    const auto x = named("direct_product(cyclic:2,cyclic:4)");  // (a,b) at 4a+b
    const auto dx = InternalDecomposition::verified(x, {sub(x, {0, 4}), sub(x, {0, 1, 2, 3})});
    const auto c = cancel_factor(dx, 0, dx, 0);
    EXPECT_EQ(members(c.complement_x), (std::vector<Element>{0, 1, 2, 3}));
    expect_iso(c.isomorphism);
    EXPECT_TRUE(are_isomorphic(as_group(c.complement_y).group, named("cyclic:4")));
  }
  {
    const auto x = named("direct_product(cyclic:2,elementary_abelian:2:2)");
    const auto y = named("direct_product(elementary_abelian:2:2,cyclic:2)");
    const auto dx = InternalDecomposition::verified(x, {sub(x, {0, 4}), sub(x, {0, 1, 2, 3})});
    const auto dy = InternalDecomposition::verified(y, {sub(y, {0, 1}), sub(y, {0, 2, 4, 6})});
    const auto c = cancel_factor(dx, 0, dy, 0);
    expect_iso(c.isomorphism);
    EXPECT_TRUE(are_isomorphic(as_group(c.complement_x).group, named("elementary_abelian:2:2")));
  }
  {
    const auto x = named("direct_product(symmetric:3,cyclic:4)");  // (s,c) at 4s+c
    const auto y = named("direct_product(cyclic:4,symmetric:3)");  // (c,s) at 6c+s
    const auto dx = InternalDecomposition::verified(x, {sub(x, {0, 4, 8, 12, 16, 20}), sub(x, {0, 1, 2, 3})});
    const auto dy = InternalDecomposition::verified(y, {sub(y, {0, 1, 2, 3, 4, 5}), sub(y, {0, 6, 12, 18})});
    const auto c = cancel_factor(dx, 0, dy, 0);
    expect_iso(c.isomorphism);
    EXPECT_TRUE(are_isomorphic(as_group(c.complement_y).group, named("cyclic:4")));
  }
}

TEST(Cancel, Errors) {
  const auto x = named("direct_product(cyclic:2,cyclic:4)");
  const auto y = named("elementary_abelian:2:3");
  const auto dx = InternalDecomposition::verified(x, {sub(x, {0, 4}), sub(x, {0, 1, 2, 3})});
  const auto dy = InternalDecomposition::verified(y, {sub(y, {0, 4}), sub(y, {0, 1, 2, 3})});
  EXPECT_EQ(kind_of([&] { cancel_factor(dx, 0, dy, 0); }), ErrorKind::kNotIsomorphicAmbient);
  const auto dx2 = InternalDecomposition::verified(x, {sub(x, {0, 1, 2, 3}), sub(x, {0, 4})});
  EXPECT_EQ(kind_of([&] { cancel_factor(dx, 0, dx2, 0); }), ErrorKind::kPreconditionViolated);
  EXPECT_EQ(kind_of([&] { cancel_factor(dx, 5, dx, 0); }), ErrorKind::kPreconditionViolated);
}

}  // namespace
}  // namespace kschmidt
