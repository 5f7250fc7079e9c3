#pragma once

#include <array>

#include "kschmidt/group.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/subgroup.hpp"

namespace kschmidt {

struct DirectProduct {
  FiniteGroup group;
  // inclusions[i] : factor i -> group, projections[i] : group -> factor i,
  // with projections[i] ∘ inclusions[i] the identity.
  std::array<GroupHom, 2> inclusions;
  std::array<GroupHom, 2> projections;
};

/// G × H with (g, h) stored at index g·|H| + h.
DirectProduct direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};

/// G/N with cosets numbered by their least element, so N itself is 0.
/// Throws Error{kNotNormal} if N is not normal.
Quotient quotient(const Subgroup& normal_subgroup);

struct SubgroupGroup {
  FiniteGroup group;
  // Element i of `group` is subgroup.members()[i].
  GroupHom embedding;
};

/// The subgroup as a standalone group.
SubgroupGroup as_group(const Subgroup& subgroup);

}  // namespace kschmidt
