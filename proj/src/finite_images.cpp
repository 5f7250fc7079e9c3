#include "kschmidt/finite_images.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hom_search.hpp"
#include "kschmidt/constructions.hpp"
#include "kschmidt/error.hpp"

namespace kschmidt {

std::optional<std::size_t> FinSet::find(const FiniteGroup& group, const Limits& limits) const {
  const auto fp = fingerprint(group);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].fingerprint == fp && are_isomorphic(group, classes[i].representative, limits)) return i;
  }
  return std::nullopt;
}

FinSet fin_images(const ProfiniteTower& tower, std::size_t max_order, const Limits& limits) {
  FinSet out;
  out.max_order = max_order;
  for (const auto& level : tower.levels()) {
    if (level.order() > limits.order_cap) {
      throw Error(ErrorKind::kOrderBudgetExceeded, "level of order " + std::to_string(level.order()) +
                                                       " exceeds cap " + std::to_string(limits.order_cap));
    }
    for (const auto& n : normal_subgroups(level, limits)) {
      if (level.order() / n.order() > max_order) continue;
      FiniteGroup q = quotient(n).group;
      if (out.find(q, limits)) continue;
      out.classes.push_back(FinClass{fingerprint(q), std::move(q)});
    }
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](const FinClass& a, const FinClass& b) { return a.fingerprint < b.fingerprint; });
  return out;
}

FinComparison compare_fin(const FinSet& left, const FinSet& right, const Limits& limits) {
  FinComparison out;
  for (const auto& c : left.classes) {
    if (!right.find(c.representative, limits)) {
      out.equal = false;
      out.witness = c;
      out.side = "left";
      return out;
    }
  }
  for (const auto& c : right.classes) {
    if (!left.find(c.representative, limits)) {
      out.equal = false;
      out.witness = c;
      out.side = "right";
      return out;
    }
  }
  return out;
}

FinComparison same_fin(const ProfiniteTower& left, const ProfiniteTower& right, std::size_t max_order,
                       const Limits& limits) {
  return compare_fin(fin_images(left, max_order, limits), fin_images(right, max_order, limits), limits);
}

FiberPower fiber_power(const FiberPowerSpec& spec, const Limits& limits) {
  const FiniteGroup& g = spec.group;
  for (const auto* sub : {&spec.g0, &spec.m0, &spec.kernel}) {
    if (!sub->parent().same_as(g) && !(sub->parent() == g)) {
      throw Error(ErrorKind::kContainmentViolated, "subgroup does not live in the given group");
    }
  }
  if (!spec.g0.contains(spec.m0)) throw Error(ErrorKind::kContainmentViolated, "M0 is not contained in G0");
  if (!spec.g0.contains(spec.kernel)) throw Error(ErrorKind::kContainmentViolated, "N is not contained in G0");

  const Quotient by_n = quotient(spec.kernel);
  const Quotient by_m = quotient(spec.m0);
  const Quotient by_g0 = quotient(spec.g0);
  const std::size_t base = by_n.group.order();
  const std::size_t fiber = spec.g0.order() / spec.m0.order();

  std::size_t predicted = base;
  for (std::size_t j = 0; j < spec.copies; ++j) {
    if (predicted > limits.order_cap / fiber) {
      throw Error(ErrorKind::kOrderBudgetExceeded,
                  "fiber power exceeds cap " + std::to_string(limits.order_cap));
    }
    predicted *= fiber;
  }
  if (predicted > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded, "fiber power exceeds cap " + std::to_string(limits.order_cap));
  }

  // Cosets of N and M0 over G/G0, via representatives.
  std::vector<Element> n_to_top(base), m_to_top(by_m.group.order());
  for (Element x = 0; x < g.order(); ++x) {
    n_to_top[by_n.projection(x)] = by_g0.projection(x);
    m_to_top[by_m.projection(x)] = by_g0.projection(x);
  }
  std::vector<std::vector<Element>> fibers(by_g0.group.order());
  std::vector<std::size_t> fiber_pos(by_m.group.order());
  for (Element b = 0; b < by_m.group.order(); ++b) {
    fiber_pos[b] = fibers[m_to_top[b]].size();
    fibers[m_to_top[b]].push_back(b);
  }

  const std::size_t r = spec.copies;
  const std::size_t order = predicted;
  // Decoded coordinates of every element: [a, b_1, ..., b_r].
  std::vector<Element> coords(order * (r + 1));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    Element* c = &coords[idx * (r + 1)];
    for (std::size_t j = r; j-- > 0;) {
      c[j + 1] = static_cast<Element>(rest % fiber);
      rest /= fiber;
    }
    c[0] = static_cast<Element>(rest);
    for (std::size_t j = 0; j < r; ++j) c[j + 1] = fibers[n_to_top[c[0]]][c[j + 1]];
  }
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const Element* cx = &coords[x * (r + 1)];
    for (std::size_t y = 0; y < order; ++y) {
      const Element* cy = &coords[y * (r + 1)];
      std::size_t idx = by_n.group.mul(cx[0], cy[0]);
      for (std::size_t j = 1; j <= r; ++j) idx = idx * fiber + fiber_pos[by_m.group.mul(cx[j], cy[j])];
      table[x * order + y] = static_cast<Element>(idx);
    }
  }

  std::ostringstream desc;
  desc << "fiber power of " << g.label() << " (|G|=" << g.order() << ", |G0|=" << spec.g0.order()
       << ", |M0|=" << spec.m0.order() << ", |N|=" << spec.kernel.order() << ", n=" << r
       << "): subgroup of G/N x (G/M0)^" << r << " of order " << base << "*" << fiber << "^" << r << " = "
       << order;
  std::ostringstream label;
  label << "fiber(" << g.label() << ",n=" << r << ")";
  return FiberPower{FiniteGroup(kTrusted, order, std::move(table), label.str()), desc.str(), predicted};
}

namespace {

std::size_t exponent_of(const FiniteGroup& group) {
  std::size_t e = 1;
  for (Element x = 0; x < group.order(); ++x) e = std::lcm(e, group.element_order(x));
  return e;
}

std::size_t abelianization_order(const FiniteGroup& group) {
  return group.order() / derived_subgroup(group).order();
}

}  // namespace

std::optional<GroupHom> find_surjection(const FiniteGroup& source, const FiniteGroup& target,
                                        const Limits& limits) {
  if (source.order() % target.order() != 0) return std::nullopt;
  if (source.is_abelian() && !target.is_abelian()) return std::nullopt;
  if (abelianization_order(source) % abelianization_order(target) != 0) return std::nullopt;

  const auto gens = greedy_generators(source);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y = 0; y < target.order(); ++y) {
      if (source.element_order(gens[i]) % target.element_order(y) == 0) candidates[i].push_back(y);
    }
  }
  // Later generators can enlarge an abelian image by at most
  // gcd(order, exp H) each.
  std::vector<std::size_t> growth(gens.size() + 1, 1);
  const std::size_t exp_target = exponent_of(target);
  for (std::size_t i = gens.size(); i-- > 0;) {
    growth[i] = growth[i + 1] * std::gcd(source.element_order(gens[i]), exp_target);
  }
  detail::HomSearch::Prune prune;
  if (target.is_abelian()) {
    prune = [&](std::size_t depth, std::span<const Element> images) {
      const std::size_t reached = generate(target, images).order();
      return reached * growth[depth + 1] < target.order();
    };
  }
  std::optional<GroupHom> found;
  detail::HomSearch search(source, target, gens, std::move(candidates), /*injective=*/false,
                           limits.search_nodes);
  search.run(
      [&](const std::vector<Element>& images) {
        GroupHom f(kTrusted, source, target, images);
        if (!f.is_surjective()) return false;
        found = std::move(f);
        return true;
      },
      prune);
  return found;
}

std::optional<ImageWitness> verify_image(const ProfiniteTower& tower, const FiniteGroup& image,
                                         const Limits& limits) {
  if (image.order() > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded, "image order " + std::to_string(image.order()) +
                                                     " exceeds cap " + std::to_string(limits.order_cap));
  }
  for (std::size_t k = 0; k < tower.depth(); ++k) {
    if (auto f = find_surjection(tower.level(k), image, limits)) return ImageWitness{k, std::move(*f)};
  }
  return std::nullopt;
}

}  // namespace kschmidt
