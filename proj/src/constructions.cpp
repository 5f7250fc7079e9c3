#include "kschmidt/constructions.hpp"

#include "kschmidt/error.hpp"

namespace kschmidt {

DirectProduct direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t m = g.order();
  const std::size_t k = h.order();
  if (m * k > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded,
                "direct product of order " + std::to_string(m * k) + " exceeds cap " +
                    std::to_string(limits.order_cap));
  }
  const std::size_t n = m * k;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element ag = static_cast<Element>(a / k);
    const Element ah = static_cast<Element>(a % k);
    for (std::size_t b = 0; b < n; ++b) {
      const Element bg = static_cast<Element>(b / k);
      const Element bh = static_cast<Element>(b % k);
      table[a * n + b] = static_cast<Element>(g.mul(ag, bg) * k + h.mul(ah, bh));
    }
  }
  std::string label;
  if (!g.label().empty() || !h.label().empty()) label = g.label() + " x " + h.label();
  FiniteGroup product(kTrusted, n, std::move(table), std::move(label));

  std::vector<Element> inc_g(m), inc_h(k), proj_g(n), proj_h(n);
  for (std::size_t a = 0; a < m; ++a) inc_g[a] = static_cast<Element>(a * k);
  for (std::size_t b = 0; b < k; ++b) inc_h[b] = static_cast<Element>(b);
  for (std::size_t x = 0; x < n; ++x) {
    proj_g[x] = static_cast<Element>(x / k);
    proj_h[x] = static_cast<Element>(x % k);
  }
  return DirectProduct{
      product,
      {GroupHom(kTrusted, g, product, std::move(inc_g)), GroupHom(kTrusted, h, product, std::move(inc_h))},
      {GroupHom(kTrusted, product, g, std::move(proj_g)), GroupHom(kTrusted, product, h, std::move(proj_h))},
  };
}

Quotient quotient(const Subgroup& normal_subgroup) {
  const FiniteGroup& g = normal_subgroup.parent();
  if (!is_normal(normal_subgroup)) {
    throw Error(ErrorKind::kNotNormal, "quotient by a non-normal subgroup");
  }
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset_of(g.order(), kUnset);
  std::vector<Element> representatives;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto c = static_cast<Element>(representatives.size());
    representatives.push_back(x);
    for (const Element m : normal_subgroup.members()) coset_of[g.mul(x, m)] = c;
  }
  const std::size_t q = representatives.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = coset_of[g.mul(representatives[a], representatives[b])];
    }
  }
  std::string label;
  if (!g.label().empty()) label = g.label() + " / N" + std::to_string(normal_subgroup.order());
  FiniteGroup quotient_group(kTrusted, q, std::move(table), std::move(label));
  GroupHom projection(kTrusted, g, quotient_group, std::move(coset_of));
  return Quotient{std::move(quotient_group), std::move(projection)};
}

SubgroupGroup as_group(const Subgroup& subgroup) {
  const FiniteGroup& g = subgroup.parent();
  const auto members = subgroup.members();
  const std::size_t n = members.size();
  std::vector<Element> position(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) position[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = position[g.mul(members[a], members[b])];
  }
  FiniteGroup standalone(kTrusted, n, std::move(table));
  GroupHom embedding(kTrusted, standalone, g, std::vector<Element>(members.begin(), members.end()));
  return SubgroupGroup{std::move(standalone), std::move(embedding)};
}

}  // namespace kschmidt
