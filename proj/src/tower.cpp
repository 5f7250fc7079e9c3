#include "kschmidt/tower.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "kschmidt/constructions.hpp"
#include "kschmidt/error.hpp"

namespace kschmidt {

ProfiniteTower::ProfiniteTower(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> maps)
    : levels_(std::move(levels)), maps_(std::move(maps)) {
  if (levels_.empty()) throw Error(ErrorKind::kBadInput, "tower has no levels");
  if (maps_.size() + 1 != levels_.size()) {
    throw Error(ErrorKind::kBadInput, "tower with " + std::to_string(levels_.size()) + " levels needs " +
                                          std::to_string(levels_.size() - 1) + " maps, got " +
                                          std::to_string(maps_.size()));
  }
}

ProfiniteTower::ProfiniteTower(std::vector<FiniteGroup> levels, const std::vector<GroupHom>& connecting)
    : ProfiniteTower(std::move(levels), [&] {
        std::vector<std::vector<Element>> maps;
        for (const auto& f : connecting) maps.emplace_back(f.images().begin(), f.images().end());
        return maps;
      }()) {}

GroupHom ProfiniteTower::connecting(std::size_t k) const {
  try {
    return GroupHom::verified(levels_.at(k + 1), levels_.at(k), maps_.at(k));
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidTower, "map " + std::to_string(k) + ": " + e.what());
  }
}

GroupHom ProfiniteTower::span_map(std::size_t from, std::size_t to) const {
  if (to > from || from >= depth()) throw Error(ErrorKind::kBadParams, "span_map needs to <= from < depth");
  GroupHom result = GroupHom::identity(levels_[from]);
  for (std::size_t k = from; k > to; --k) result = compose(connecting(k - 1), result);
  return result;
}

TowerValidation validate_tower(const ProfiniteTower& tower) {
  TowerValidation report;
  for (std::size_t k = 0; k + 1 < tower.depth(); ++k) {
    std::ostringstream where;
    where << "map " << k << " (level " << k + 1 << " -> level " << k << "): ";
    const auto& map = tower.maps()[k];
    const auto& src = tower.level(k + 1);
    const auto& dst = tower.level(k);
    try {
      const GroupHom f = GroupHom::verified(src, dst, map);
      if (!f.is_surjective()) {
        report.violations.push_back(where.str() + "not surjective (image order " +
                                    std::to_string(f.image().order()) + " of " + std::to_string(dst.order()) +
                                    ")");
      }
    } catch (const Error& e) {
      report.violations.push_back(where.str() + e.what());
    }
  }
  report.valid = report.violations.empty();
  return report;
}

void require_valid(const ProfiniteTower& tower) {
  const auto report = validate_tower(tower);
  if (!report.valid) throw Error(ErrorKind::kInvalidTower, report.violations.front());
}

ProfiniteTower verbal_quotient_tower(const FiniteGroup& group, std::span<const std::uint64_t> exponents) {
  if (exponents.empty()) throw Error(ErrorKind::kBadParams, "no exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw Error(ErrorKind::kBadParams, "exponent must be >= 1");
    if (i > 0 && exponents[i] % exponents[i - 1] != 0) {
      throw Error(ErrorKind::kDivisibilityViolated, std::to_string(exponents[i - 1]) + " does not divide " +
                                                        std::to_string(exponents[i]));
    }
  }
  std::vector<Quotient> quotients;
  for (const auto m : exponents) quotients.push_back(quotient(verbal_power_subgroup(group, m)));
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<Element>> maps;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    levels.push_back(quotients[k].group);
    if (k == 0) continue;
    // Coset c of the finer level maps to the coset of any representative.
    std::vector<Element> map(quotients[k].group.order(), 0);
    for (Element g = 0; g < group.order(); ++g) map[quotients[k].projection(g)] = quotients[k - 1].projection(g);
    maps.push_back(std::move(map));
  }
  return ProfiniteTower(std::move(levels), std::move(maps));
}

namespace {

// Correspondence from the factors of `upper` (level k+1) to those of
// `lower` (level k), or empty if some factor straddles.
std::optional<std::vector<std::size_t>> correspond(const GroupHom& connecting, const InternalDecomposition& upper,
                                                   const InternalDecomposition& lower) {
  std::vector<std::size_t> out(upper.size(), 0);
  std::vector<std::vector<Element>> generated(lower.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Subgroup image = connecting.image_of(upper.factors()[j]);
    if (lower.size() == 0) {
      out[j] = CoherentDecomposition::kToTrivial;
      continue;
    }
    if (image.is_trivial()) continue;
    std::size_t hit = lower.size();
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower.factors()[i].contains(image)) {
        hit = i;
        break;
      }
    }
    if (hit == lower.size()) return std::nullopt;
    out[j] = hit;
    generated[hit].insert(generated[hit].end(), image.members().begin(), image.members().end());
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (generate(lower.parent(), generated[i]) != lower.factors()[i]) return std::nullopt;
  }
  return out;
}

}  // namespace

CoherentDecomposition tower_decompose(const ProfiniteTower& tower, const Limits& limits) {
  require_valid(tower);
  const std::size_t depth = tower.depth();
  std::vector<std::vector<InternalDecomposition>> options;
  options.reserve(depth);
  for (const auto& level : tower.levels()) options.push_back(all_decompositions(level, limits));
  std::vector<GroupHom> connecting;
  for (std::size_t k = 0; k + 1 < depth; ++k) connecting.push_back(tower.connecting(k));

  std::vector<std::size_t> chosen(depth, 0);
  std::vector<std::vector<std::size_t>> correspondence(depth - 1);
  std::uint64_t nodes = 0;
  // Fills levels k, k-1, ..., 0 given the choice at level k+1.
  std::function<bool(std::size_t)> fill = [&](std::size_t k) -> bool {
    for (std::size_t c = 0; c < options[k].size(); ++c) {
      if (++nodes > limits.search_nodes) {
        throw Error(ErrorKind::kNoCoherentChain, "node budget " + std::to_string(limits.search_nodes) +
                                                     " exhausted");
      }
      if (k + 1 < depth) {
        auto corr = correspond(connecting[k], options[k + 1][chosen[k + 1]], options[k][c]);
        if (!corr) continue;
        correspondence[k] = std::move(*corr);
      }
      chosen[k] = c;
      if (k == 0 || fill(k - 1)) return true;
    }
    return false;
  };
  if (!fill(depth - 1)) {
    throw Error(ErrorKind::kNoCoherentChain, "no coherent chain among the enumerated decompositions");
  }
  CoherentDecomposition out;
  for (std::size_t k = 0; k < depth; ++k) out.per_level.push_back(options[k][chosen[k]]);
  out.correspondence = std::move(correspondence);
  return out;
}

std::vector<WBoundRow> w_bound(const ProfiniteTower& tower, const CoherentDecomposition& chain,
                               std::uint64_t exponent) {
  std::vector<WBoundRow> rows;
  for (std::size_t k = 0; k < tower.depth(); ++k) {
    const auto verbal = verbal_power_subgroup(tower.level(k), exponent);
    WBoundRow row;
    row.level = k;
    row.exponent = exponent;
    row.quotient_order = tower.level(k).order() / verbal.order();
    for (const auto& factor : chain.per_level.at(k).factors()) {
      if (!verbal.contains(factor)) ++row.escaping;
    }
    row.holds = row.escaping < 63 && (std::uint64_t{1} << row.escaping) <= row.quotient_order;
    rows.push_back(row);
  }
  return rows;
}

std::vector<CancellationResult> cancel_levelwise(const ProfiniteTower& x, std::span<const InternalDecomposition> dx,
                                                 std::size_t x_distinguished, const ProfiniteTower& y,
                                                 std::span<const InternalDecomposition> dy,
                                                 std::size_t y_distinguished, const Limits& limits) {
  if (x.depth() != y.depth() || dx.size() != x.depth() || dy.size() != y.depth()) {
    throw Error(ErrorKind::kBadParams, "levelwise cancellation needs one decomposition per level of equal-depth towers");
  }
  std::vector<CancellationResult> out;
  for (std::size_t k = 0; k < x.depth(); ++k) {
    out.push_back(cancel_factor(dx[k], x_distinguished, dy[k], y_distinguished, limits));
  }
  return out;
}

bool levelwise_isomorphisms_commute(const ProfiniteTower& x, const ProfiniteTower& y,
                                    std::span<const CancellationResult> levels, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto& upper = levels[k + 1];
    const auto& lower = levels[k];
    const auto& conn_x = x.maps()[k];
    const auto& conn_y = y.maps()[k];
    for (std::size_t p = 0; p < upper.complement_x.order(); ++p) {
      const Element a = upper.complement_x.members()[p];
      const Element a_down = conn_x[a];
      if (!lower.complement_x.contains(a_down)) {
        return fail("level " + std::to_string(k + 1) + ": connecting map leaves the X complement");
      }
      const Element via_lower = lower.complement_y.members()[lower.isomorphism(
          static_cast<Element>(lower.complement_x.position(a_down)))];
      const Element b = upper.complement_y.members()[upper.isomorphism(static_cast<Element>(p))];
      if (conn_y[b] != via_lower) {
        return fail("level " + std::to_string(k + 1) + ": isomorphisms do not commute at element " +
                    std::to_string(a));
      }
    }
  }
  return true;
}

}  // namespace kschmidt
