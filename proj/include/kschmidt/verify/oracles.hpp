#pragma once

// Brute-force reference implementations. They share no search code with
// the library and are only meant for small groups.

#include <cstdint>
#include <vector>

#include "kschmidt/group.hpp"

namespace kschmidt::oracle {

using MemberSet = std::vector<Element>;

/// Every subgroup, by depth-first search over subsets of the elements with
/// closure pruning. Sorted by (order, members).
std::vector<MemberSet> subgroups(const FiniteGroup& group);

/// Subgroups closed under conjugation by every element.
std::vector<MemberSet> normal_subgroups(const FiniteGroup& group);

/// Decomposable iff two nontrivial subgroups commute elementwise, meet
/// trivially and multiply out to the whole group.
bool is_indecomposable(const FiniteGroup& group);

/// Exhaustive search over bijections fixing the identity, with the
/// homomorphism condition checked as soon as a product is fully assigned.
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Every map g -> g preserving products, by the same element-by-element
/// search without the bijectivity requirement.
std::vector<std::vector<Element>> endomorphisms(const FiniteGroup& group);

/// Subgroup generated by m-th powers, by repeated multiplication until
/// nothing new appears.
MemberSet power_subgroup(const FiniteGroup& group, std::uint64_t m);

}  // namespace kschmidt::oracle
