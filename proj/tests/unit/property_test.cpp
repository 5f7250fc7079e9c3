// Randomized properties with fixed seeds.
#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "kschmidt/endomorphism.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/verify/oracles.hpp"
#include "support.hpp"

namespace kschmidt {
namespace {

using test::named;

const std::vector<std::string> kPieces = {"cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3", "quaternion",
                                          "dihedral:4", "cyclic:5", "elementary_abelian:2:2"};

FiniteGroup random_product(std::mt19937& rng, std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  FiniteGroup g;
  for (int tries = 0; tries < 4; ++tries) {
    const auto piece = named(kPieces[pick(rng)]);
    if (g.order() * piece.order() > max_order) continue;
    g = direct_product(g, piece).group;
  }
  return g;
}

FiniteGroup relabel(const FiniteGroup& g, std::mt19937& rng) {
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Element> back(g.order());
  for (Element x = 0; x < g.order(); ++x) back[perm[x]] = x;
  std::vector<Element> table(g.order() * g.order());
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) table[perm[a] * g.order() + perm[b]] = perm[g.mul(a, b)];
  }
  return FiniteGroup(kTrusted, g.order(), std::move(table));
}

std::vector<IsoFingerprint> factor_fingerprints(const InternalDecomposition& d) {
  std::vector<IsoFingerprint> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(fingerprint(d.factor_group(i)));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Property, DecompositionInvariantUnderRelabeling) {
  std::mt19937 rng(20261016);
  for (int iter = 0; iter < 40; ++iter) {
    const auto g = random_product(rng, 96);
    const auto h = relabel(g, rng);
    const auto dg = decompose(g);
    const auto dh = decompose(h);
    std::size_t product = 1;
    for (const auto& f : dg.factors()) product *= f.order();
    EXPECT_EQ(product, g.order());
    EXPECT_EQ(factor_fingerprints(dg), factor_fingerprints(dh));
    const auto f = find_isomorphism(g, h);
    ASSERT_TRUE(f);
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) ASSERT_EQ((*f)(g.mul(a, b)), h.mul((*f)(a), (*f)(b)));
    }
  }
}

TEST(Property, NormalSubgroupsAndQuotients) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    const auto g = relabel(random_product(rng, 48), rng);
    const auto normals = normal_subgroups(g);
    EXPECT_TRUE(std::is_sorted(normals.begin(), normals.end()));
    for (const auto& n : normals) {
      EXPECT_EQ(g.order() % n.order(), 0u);
      const auto q = quotient(n);
      EXPECT_EQ(q.group.order() * n.order(), g.order());
      EXPECT_EQ(q.projection.kernel(), n);
      EXPECT_TRUE(q.projection.is_surjective());
    }
    if (g.order() <= 12) {
      std::vector<std::vector<Element>> mine;
      for (const auto& n : normals) mine.push_back(test::members(n));
      EXPECT_EQ(mine, oracle::normal_subgroups(g));
    }
  }
}

TEST(Property, FittingOnRandomEndomorphisms) {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    const auto g = relabel(random_product(rng, 16), rng);
    const auto endos = enumerate_endomorphisms(g, true);
    ASSERT_FALSE(endos.empty());
    std::uniform_int_distribution<std::size_t> pick(0, endos.size() - 1);
    for (int k = 0; k < 5; ++k) {
      const auto& f = endos[pick(rng)];
      const auto split = fitting_decomposition(f);
      EXPECT_TRUE(is_internal_direct_sum(split.kernel_part, split.image_part));
      EXPECT_TRUE(power(f, split.exponent).kernel() == split.kernel_part);
      const auto cls = classify_normal_endo(f);
      if (cls.kind == EndoKind::kNeither) EXPECT_FALSE(is_indecomposable(g));
      if (cls.kind == EndoKind::kAutomorphism) EXPECT_TRUE(split.kernel_part.is_trivial());
      if (cls.kind == EndoKind::kNilpotent) EXPECT_TRUE(split.image_part.is_trivial());
    }
  }
}

TEST(Property, PermutationClosureOrderDividesFactorial) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t degree = 2 + iter % 5;
    std::vector<Permutation> gens(1 + iter % 3);
    for (auto& p : gens) {
      p.resize(degree);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
    }
    const auto g = FiniteGroup::from_permutations(degree, gens);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= degree; ++k) fact *= k;
    EXPECT_EQ(fact % g.order(), 0u);
    for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
  }
}

TEST(Property, VerbalSubgroupsMultiply) {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const auto a = random_product(rng, 12);
    const auto b = random_product(rng, 12);
    const auto p = direct_product(a, b).group;
    for (std::uint64_t m = 1; m <= 8; ++m) {
      EXPECT_EQ(verbal_power_subgroup(p, m).order(),
                verbal_power_subgroup(a, m).order() * verbal_power_subgroup(b, m).order());
    }
  }
}

}  // namespace
}  // namespace kschmidt
