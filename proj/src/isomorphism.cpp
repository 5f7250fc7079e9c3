#include "kschmidt/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "hom_search.hpp"
#include "kschmidt/constructions.hpp"
#include "kschmidt/subgroup.hpp"

namespace kschmidt {
namespace {

std::vector<std::size_t> class_size_of_each(const FiniteGroup& g) {
  std::vector<std::size_t> size(g.order(), 1);
  for (const auto& cls : conjugacy_classes(g)) {
    for (const Element x : cls) size[x] = cls.size();
  }
  return size;
}

}  // namespace

IsoFingerprint fingerprint(const FiniteGroup& group) {
  IsoFingerprint fp;
  fp.order = group.order();
  std::map<std::size_t, std::size_t> histogram;
  for (Element x = 0; x < group.order(); ++x) ++histogram[group.element_order(x)];
  fp.element_order_histogram.assign(histogram.begin(), histogram.end());
  fp.abelian = group.is_abelian();
  fp.center_order = center(group).order();

  FiniteGroup current = group;
  fp.derived_series_orders.push_back(current.order());
  while (true) {
    const auto derived = derived_subgroup(current);
    if (derived.order() == current.order()) break;
    fp.derived_series_orders.push_back(derived.order());
    if (derived.is_trivial()) break;
    current = as_group(derived).group;
  }

  for (const auto& cls : conjugacy_classes(group)) fp.conjugacy_class_sizes.push_back(cls.size());
  std::sort(fp.conjugacy_class_sizes.begin(), fp.conjugacy_class_sizes.end());
  return fp;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;

  const auto gens = greedy_generators(g);
  const auto g_class = class_size_of_each(g);
  const auto h_class = class_size_of_each(h);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y = 1; y < h.order(); ++y) {
      if (h.element_order(y) == g.element_order(gens[i]) && h_class[y] == g_class[gens[i]]) {
        candidates[i].push_back(y);
      }
    }
  }

  std::optional<GroupHom> witness;
  detail::HomSearch search(g, h, gens, std::move(candidates), /*injective=*/true, limits.search_nodes);
  search.run([&](const std::vector<Element>& images) {
    witness = GroupHom::verified(g, h, images);
    return true;
  });
  return witness;
}

}  // namespace kschmidt
