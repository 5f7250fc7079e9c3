#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/limits.hpp"

namespace kschmidt {

/// Isomorphism invariants. Isomorphic groups always have equal
/// fingerprints; equal fingerprints do not imply isomorphism.
struct IsoFingerprint {
  std::size_t order = 1;
  // (element order, count), ascending by element order.
  std::vector<std::pair<std::size_t, std::size_t>> element_order_histogram;
  bool abelian = true;
  std::size_t center_order = 1;
  // |G|, |G'|, |G''|, ... until the series stabilizes.
  std::vector<std::size_t> derived_series_orders;
  std::vector<std::size_t> conjugacy_class_sizes;  // ascending

  friend auto operator<=>(const IsoFingerprint&, const IsoFingerprint&) = default;
};

IsoFingerprint fingerprint(const FiniteGroup& group);

/// A bijective homomorphism g -> h, if one exists. Backtracks over images of
/// greedy_generators(g), pruned by element order and class size; the first
/// witness in canonical order is returned, so find_isomorphism(g, g) is the
/// identity. Throws Error{kSearchBudgetExceeded} when limits.search_nodes
/// is exhausted, which is distinct from "not isomorphic".
std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                         const Limits& limits = {});

inline bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {}) {
  return find_isomorphism(g, h, limits).has_value();
}

}  // namespace kschmidt
