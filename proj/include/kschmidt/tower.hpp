#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/limits.hpp"

namespace kschmidt {

/// A finite truncation of an inverse system of finite groups.
///
/// Level 0 is the coarsest; maps()[k] sends level k+1 onto level k. Only
/// adjacent maps are stored. Construction checks shapes only; use
/// validate_tower() for the homomorphism and surjectivity conditions.
class ProfiniteTower {
 public:
  /// Throws Error{kBadInput} if there are no levels or the number of maps is
  /// not one less than the number of levels.
  ProfiniteTower(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> maps);
  ProfiniteTower(std::vector<FiniteGroup> levels, const std::vector<GroupHom>& connecting);

  std::size_t depth() const noexcept { return levels_.size(); }
  const FiniteGroup& level(std::size_t k) const { return levels_.at(k); }
  std::span<const FiniteGroup> levels() const noexcept { return levels_; }
  std::span<const std::vector<Element>> maps() const noexcept { return maps_; }

  /// levels[k+1] -> levels[k]. Throws Error{kInvalidTower} if the stored
  /// map is not a homomorphism.
  GroupHom connecting(std::size_t k) const;
  /// Composite levels[from] -> levels[to] for to <= from.
  GroupHom span_map(std::size_t from, std::size_t to) const;

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<Element>> maps_;
};

struct TowerValidation {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks map shapes, the homomorphism property and surjectivity of every
/// connecting map; never throws.
TowerValidation validate_tower(const ProfiniteTower& tower);

/// Throws Error{kInvalidTower} listing the first violation.
void require_valid(const ProfiniteTower& tower);

/// Levels G/G^{m_1} <- G/G^{m_2} <- ... with the natural projections.
/// Throws Error{kDivisibilityViolated} unless each m_i divides m_{i+1}.
ProfiniteTower verbal_quotient_tower(const FiniteGroup& group, std::span<const std::uint64_t> exponents);

/// One decomposition into indecomposables per level, with each factor of
/// level k+1 mapped into a single factor of level k.
struct CoherentDecomposition {
  // Marks a factor whose target level is the trivial group.
  static constexpr std::size_t kToTrivial = std::numeric_limits<std::size_t>::max();

  std::vector<InternalDecomposition> per_level;
  // correspondence[k][j]: factor of level k that factor j of level k+1 maps
  // into. A factor with trivial image is assigned to factor 0.
  std::vector<std::vector<std::size_t>> correspondence;
};

/// Exhaustive search over per-level decompositions, deepest level first,
/// returning the first coherent chain in canonical order. Throws
/// Error{kNoCoherentChain} when none exists among the enumerated
/// decompositions or the node budget runs out.
CoherentDecomposition tower_decompose(const ProfiniteTower& tower, const Limits& limits = {});

/// Factors escaping the verbal subgroup G_k^m at one level.
struct WBoundRow {
  std::size_t level = 0;
  std::uint64_t exponent = 1;
  std::size_t escaping = 0;
  std::size_t quotient_order = 1;  // |G_k / G_k^m|
  // 2^escaping <= quotient_order: the quotient is the direct product of the
  // images of the factors, each escaping one contributing at least 2.
  bool holds = true;
};

std::vector<WBoundRow> w_bound(const ProfiniteTower& tower, const CoherentDecomposition& chain,
                               std::uint64_t exponent);

/// cancel_factor applied at every level of two towers whose levels come with
/// decompositions (distinguished factor index fixed across levels).
std::vector<CancellationResult> cancel_levelwise(const ProfiniteTower& x,
                                                 std::span<const InternalDecomposition> dx,
                                                 std::size_t x_distinguished, const ProfiniteTower& y,
                                                 std::span<const InternalDecomposition> dy,
                                                 std::size_t y_distinguished, const Limits& limits = {});

/// True iff every level isomorphism commutes with the connecting maps
/// restricted to the complements. `why` receives the first failure.
bool levelwise_isomorphisms_commute(const ProfiniteTower& x, const ProfiniteTower& y,
                                    std::span<const CancellationResult> levels, std::string* why = nullptr);

}  // namespace kschmidt
