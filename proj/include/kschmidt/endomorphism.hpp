#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kschmidt/hom.hpp"
#include "kschmidt/limits.hpp"
#include "kschmidt/subgroup.hpp"

namespace kschmidt {

/// True iff a·f(b)·a⁻¹ = f(a·b·a⁻¹) for all a, b.
/// Throws Error{kSourceTargetMismatch} for a non-endomorphism.
bool is_normal_endomorphism(const GroupHom& f);

/// The pointwise product a ↦ φ(a)ψ(a), present only when it is again a
/// homomorphism.
std::optional<GroupHom> endo_sum(const GroupHom& phi, const GroupHom& psi);

/// All endomorphisms of `group` in lexicographic order of the images of
/// greedy_generators(group). With `normal_only`, non-normal ones are dropped.
/// Throws Error{kOrderBudgetExceeded} beyond limits.endo_order_cap.
std::vector<GroupHom> enumerate_endomorphisms(const FiniteGroup& group, bool normal_only,
                                              const Limits& limits = {});

/// G = ker fⁿ ⊕ Im fⁿ at the least exponent n ≥ 1 where kernel and image
/// chains have both stopped moving.
struct FittingSplit {
  NormalSubgroup kernel_part;
  NormalSubgroup image_part;
  std::size_t exponent = 1;
};

/// Throws Error{kNotNormal} for a non-normal endomorphism and
/// Error{kInternalContradiction} if the computed parts fail to form an
/// internal direct product.
FittingSplit fitting_decomposition(const GroupHom& f);

/// True iff `a` and `b` are normal, intersect trivially, commute elementwise
/// and their setwise product is the whole parent.
bool is_internal_direct_sum(const Subgroup& a, const Subgroup& b);

enum class EndoKind { kAutomorphism, kNilpotent, kNeither };

std::string_view endo_kind_name(EndoKind kind);

struct EndoClassification {
  EndoKind kind = EndoKind::kAutomorphism;
  // Least n with fⁿ(G) = {e}; present iff kind == kNilpotent.
  std::optional<std::size_t> nilpotency_index;
  std::size_t fitting_exponent = 1;
};

/// Automorphism iff bijective, Nilpotent iff some power is trivial,
/// otherwise Neither. Neither is only reported together with a Fitting split
/// whose two parts are both nontrivial, which certifies that the group is
/// decomposable.
EndoClassification classify_normal_endo(const GroupHom& f);

/// Least index k with fs[k] an automorphism, for normal endomorphisms of an
/// indecomposable group whose successive partial sums are endomorphisms and
/// whose total sum is an automorphism.
/// Throws Error{kPreconditionViolated} naming the failed clause, or
/// Error{kNoAutomorphicSummand} if no summand is an automorphism.
std::size_t automorphic_summand(std::span<const GroupHom> fs);

}  // namespace kschmidt
