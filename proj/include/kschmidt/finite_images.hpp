#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/limits.hpp"
#include "kschmidt/subgroup.hpp"
#include "kschmidt/tower.hpp"

namespace kschmidt {

struct FinClass {
  IsoFingerprint fingerprint;
  FiniteGroup representative;
};

/// Isomorphism classes of quotients of order <= max_order, sorted by
/// fingerprint; no two representatives are isomorphic.
struct FinSet {
  std::size_t max_order = 1;
  std::vector<FinClass> classes;

  /// Index of the class isomorphic to `group`, if any.
  std::optional<std::size_t> find(const FiniteGroup& group, const Limits& limits = {}) const;
};

/// Union over levels of the quotients L/N with |L/N| <= max_order.
FinSet fin_images(const ProfiniteTower& tower, std::size_t max_order, const Limits& limits = {});

struct FinComparison {
  bool equal = true;
  // A class present on one side only, and which side ("left" or "right").
  std::optional<FinClass> witness;
  std::string side;
};

FinComparison compare_fin(const FinSet& left, const FinSet& right, const Limits& limits = {});
FinComparison same_fin(const ProfiniteTower& left, const ProfiniteTower& right, std::size_t max_order,
                       const Limits& limits = {});

/// Data for the subgroup of G/N × (G/M0)^copies of tuples
/// (gN, g_1 M0, ..., g_n M0) with every g_j ≡ g mod G0.
struct FiberPowerSpec {
  FiniteGroup group;
  NormalSubgroup g0;
  NormalSubgroup m0;      // must lie in g0
  NormalSubgroup kernel;  // N, must lie in g0
  std::size_t copies = 0;
};

struct FiberPower {
  FiniteGroup group;
  std::string description;
  // |G/N| · |G0/M0|^copies
  std::size_t predicted_order = 1;
};

/// Elements are indexed in mixed radix: the G/N coordinate is most
/// significant, then each G/M0 coordinate by its position in the fiber over
/// G/G0. Index 0 is the identity.
/// Throws Error{kContainmentViolated} if M0 or N is not contained in G0 or
/// the subgroups live in a different group, Error{kOrderBudgetExceeded} if
/// the result exceeds limits.order_cap.
FiberPower fiber_power(const FiberPowerSpec& spec, const Limits& limits = {});

struct ImageWitness {
  std::size_t level = 0;
  GroupHom surjection;  // tower.level(level) -> H
};

/// First level (coarsest first) admitting a surjection onto `image`.
/// Throws Error{kSearchBudgetExceeded} when a search runs out of nodes.
std::optional<ImageWitness> verify_image(const ProfiniteTower& tower, const FiniteGroup& image,
                                         const Limits& limits = {});

/// Surjection source -> target, if any, found by generator-image search.
std::optional<GroupHom> find_surjection(const FiniteGroup& source, const FiniteGroup& target,
                                        const Limits& limits = {});

}  // namespace kschmidt
