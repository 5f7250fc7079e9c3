#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kschmidt/constructions.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/limits.hpp"
#include "kschmidt/subgroup.hpp"

namespace kschmidt {

/// A family of normal subgroups realizing the parent as their internal
/// direct product. Factors keep the order they were given in; decompose()
/// returns them sorted canonically.
///
/// Each element of the parent is stored with its unique component in every
/// factor, so projections and inclusions are table lookups.
class InternalDecomposition {
 public:
  /// Throws Error{kNotADecomposition} if the factors fail to commute
  /// elementwise, overlap, or fail to multiply out to the parent bijectively.
  static InternalDecomposition verified(const FiniteGroup& parent, std::vector<NormalSubgroup> factors);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const NormalSubgroup> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

  /// The factor as a standalone group; element k is factors()[i].members()[k].
  const FiniteGroup& factor_group(std::size_t i) const { return standalone_[i].group; }
  /// Component of g in factor i, as a parent element.
  Element component(Element g, std::size_t i) const noexcept {
    return components_[static_cast<std::size_t>(g) * factors_.size() + i];
  }
  /// parent -> factor_group(i)
  GroupHom projection(std::size_t i) const;
  /// factor_group(i) -> parent
  const GroupHom& inclusion(std::size_t i) const { return standalone_[i].embedding; }
  /// i_i ∘ π_i as an endomorphism of the parent.
  GroupHom idempotent(std::size_t i) const;

 private:
  InternalDecomposition() = default;

  FiniteGroup parent_;
  std::vector<NormalSubgroup> factors_;
  std::vector<SubgroupGroup> standalone_;
  std::vector<Element> components_;  // |parent| × size(), row-major
};

/// Unordered pairs (N, K) of nontrivial normal subgroups with N ∩ K = {e}
/// and |N|·|K| = |G|, in canonical order (N precedes K).
std::vector<std::pair<NormalSubgroup, NormalSubgroup>> complement_splits(const FiniteGroup& group,
                                                                         const Limits& limits = {});

enum class Indecomposability { kTrivial, kIndecomposable, kDecomposable };

/// The trivial group is reported separately rather than folded into
/// either answer.
Indecomposability indecomposability(const FiniteGroup& group, const Limits& limits = {});

/// True unless the group splits; the trivial group counts as indecomposable
/// here (see indecomposability() for the distinction).
bool is_indecomposable(const FiniteGroup& group, const Limits& limits = {});

/// Repeatedly splits along the first complement split until every factor is
/// indecomposable. Factors sorted canonically; the trivial group has none.
InternalDecomposition decompose(const FiniteGroup& group, const Limits& limits = {});

/// Every decomposition into nontrivial indecomposable factors, in canonical
/// order. Throws Error{kSearchBudgetExceeded} if more than
/// limits.search_nodes decompositions would be produced.
std::vector<InternalDecomposition> all_decompositions(const FiniteGroup& group, const Limits& limits = {});

struct MatchResult {
  // bijection[i] = index in d2 matched with factor i of d1.
  std::vector<std::size_t> bijection;
  // witnesses[i] : d1.factor_group(i) -> d2.factor_group(bijection[i])
  std::vector<GroupHom> witnesses;
};

/// Pairs the factors of two decompositions into indecomposables of the same
/// group by isomorphism class. Throws Error{kNotADecomposition} on invalid
/// input and Error{kUniquenessViolation} if no matching exists.
MatchResult match_decompositions(const FiniteGroup& group, const InternalDecomposition& d1,
                                 const InternalDecomposition& d2, const Limits& limits = {});

struct PropertyPMatch {
  std::size_t index = 0;
  // d1.factor_group(i) -> d2.factor_group(index)
  GroupHom isomorphism;
};

/// Endomorphism route to a matching partner of factor i of d1: forms
/// f_k = π_i ∘ ψ'_k ∘ π'_k ∘ ψ_i on H_i for every factor k of d2, picks the
/// first automorphic summand j of their sum (the identity on H_i), and
/// returns π'_j ∘ ψ_i. The idempotent σ on G_j built from f_j⁻¹ is checked to
/// be the identity.
/// Throws Error{kPreconditionViolated} and Error{kInternalContradiction}.
PropertyPMatch property_p_match(const FiniteGroup& group, const InternalDecomposition& d1,
                                const InternalDecomposition& d2, std::size_t i, const Limits& limits = {});

struct CancellationResult {
  Subgroup complement_x;  // product of the non-distinguished factors of dX
  Subgroup complement_y;
  GroupHom isomorphism;   // as_group(complement_x) -> as_group(complement_y)
};

/// From X = G×A ≅ Y = G×B, produces an explicit isomorphism A -> B, where
/// G is factor `x_distinguished` of dX (resp. `y_distinguished` of dY) and
/// A, B are the products of the remaining factors.
/// Throws Error{kNotIsomorphicAmbient} if X and Y are not isomorphic,
/// Error{kPreconditionViolated} if the distinguished factors differ, and
/// Error{kCancellationFailure} if refined matching fails.
CancellationResult cancel_factor(const InternalDecomposition& dx, std::size_t x_distinguished,
                                 const InternalDecomposition& dy, std::size_t y_distinguished,
                                 const Limits& limits = {});

}  // namespace kschmidt
