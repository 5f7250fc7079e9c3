#include "kschmidt/subgroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kschmidt/error.hpp"

namespace kschmidt {
namespace {

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Closes `start` (a set containing the identity) under right multiplication
// by `generators`. In a finite group this yields <start ∪ generators> when
// start is a subgroup.
std::vector<Element> close_right(const FiniteGroup& g, std::vector<char>& in,
                                 std::vector<Element> elements,
                                 std::span<const Element> generators) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Element x = elements[i];
    for (const Element s : generators) {
      const Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        elements.push_back(y);
      }
    }
  }
  return elements;
}

}  // namespace

bool Subgroup::contains(Element g) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::contains(const Subgroup& other) const noexcept {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

std::vector<char> Subgroup::mask() const {
  std::vector<char> m(parent_.order(), 0);
  for (const Element x : members_) m[x] = 1;
  return m;
}

std::size_t Subgroup::position(Element g) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(members_.begin(), members_.end(), g) - members_.begin());
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) noexcept {
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return a.members_ <=> b.members_;
}

Subgroup Subgroup::verified(const FiniteGroup& parent, std::vector<Element> members) {
  members = sorted_unique(std::move(members));
  for (const Element x : members) {
    if (x >= parent.order()) {
      throw Error(ErrorKind::kNotASubgroup, "element " + std::to_string(x) + " out of range");
    }
  }
  if (members.empty() || members.front() != 0) {
    throw Error(ErrorKind::kNotASubgroup, "identity missing");
  }
  Subgroup s(kTrusted, parent, std::move(members));
  for (const Element a : s.members_) {
    if (!s.contains(parent.inv(a))) {
      throw Error(ErrorKind::kNotASubgroup, "not closed under inverse at " + std::to_string(a));
    }
    for (const Element b : s.members_) {
      if (!s.contains(parent.mul(a, b))) {
        std::ostringstream os;
        os << "not closed under multiplication at (" << a << "," << b << ")";
        throw Error(ErrorKind::kNotASubgroup, os.str());
      }
    }
  }
  return s;
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  const auto in = s.mask();
  for (Element x = 0; x < g.order(); ++x) {
    for (const Element m : s.members()) {
      if (!in[g.conj(x, m)]) return false;
    }
  }
  return true;
}

NormalSubgroup NormalSubgroup::verified(const Subgroup& subgroup) {
  if (!is_normal(subgroup)) {
    throw Error(ErrorKind::kNotNormal, "subgroup of order " + std::to_string(subgroup.order()) +
                                           " is not normal");
  }
  return NormalSubgroup(kTrusted, subgroup.parent(),
                        std::vector<Element>(subgroup.members().begin(), subgroup.members().end()));
}

NormalSubgroup NormalSubgroup::verified(const FiniteGroup& parent, std::vector<Element> members) {
  return verified(Subgroup::verified(parent, std::move(members)));
}

NormalSubgroup NormalSubgroup::trivial(const FiniteGroup& parent) {
  return NormalSubgroup(kTrusted, parent, {0});
}

NormalSubgroup NormalSubgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return NormalSubgroup(kTrusted, parent, std::move(all));
}

Subgroup generate(const FiniteGroup& group, std::span<const Element> generators) {
  std::vector<char> in(group.order(), 0);
  in[0] = 1;
  auto elements = close_right(group, in, {0}, generators);
  return Subgroup(kTrusted, group, sorted_unique(std::move(elements)));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  auto in = a.mask();
  std::vector<Element> start(a.members().begin(), a.members().end());
  std::vector<Element> gens = start;
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  auto elements = close_right(g, in, std::move(start), gens);
  return Subgroup(kTrusted, g, sorted_unique(std::move(elements)));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(kTrusted, a.parent(), std::move(out));
}

std::vector<Element> greedy_generators(const FiniteGroup& group) {
  std::vector<Element> gens;
  std::vector<char> in(group.order(), 0);
  in[0] = 1;
  std::vector<Element> elements{0};
  for (Element x = 1; x < group.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    elements = close_right(group, in, std::move(elements), gens);
  }
  return gens;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < n; ++g) {
      const Element y = group.conj(g, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded,
                "normal subgroup enumeration: order " + std::to_string(group.order()) +
                    " exceeds cap " + std::to_string(limits.order_cap));
  }
  const auto classes = conjugacy_classes(group);
  std::set<std::vector<Element>> found{{0}};
  std::vector<std::vector<Element>> queue{{0}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::vector<Element> base = queue[qi];
    std::vector<char> base_in(group.order(), 0);
    for (const Element x : base) base_in[x] = 1;
    for (std::size_t c = 1; c < classes.size(); ++c) {
      if (base_in[classes[c].front()]) continue;
      // base is normal and the class generates a normal subgroup, so the
      // right closure of base by the class is their join.
      auto in = base_in;
      auto elements = close_right(group, in, base, classes[c]);
      auto members = sorted_unique(std::move(elements));
      if (found.insert(members).second) queue.push_back(std::move(members));
    }
  }
  std::vector<NormalSubgroup> out;
  out.reserve(found.size());
  for (const auto& m : found) out.emplace_back(kTrusted, group, m);
  std::sort(out.begin(), out.end());
  return out;
}

NormalSubgroup center(const FiniteGroup& group) {
  std::vector<Element> z;
  for (Element x = 0; x < group.order(); ++x) {
    bool central = true;
    for (Element g = 0; g < group.order() && central; ++g) central = group.mul(g, x) == group.mul(x, g);
    if (central) z.push_back(x);
  }
  return NormalSubgroup(kTrusted, group, std::move(z));
}

NormalSubgroup derived_subgroup(const FiniteGroup& group) {
  std::vector<Element> commutators;
  std::vector<char> seen(group.order(), 0);
  for (Element a = 0; a < group.order(); ++a) {
    for (Element b = 0; b < group.order(); ++b) {
      const Element c = group.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  auto s = generate(group, commutators);
  return NormalSubgroup(kTrusted, group, std::vector<Element>(s.members().begin(), s.members().end()));
}

NormalSubgroup verbal_power_subgroup(const FiniteGroup& group, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::kBadParams, "verbal power exponent must be >= 1");
  std::vector<Element> powers;
  std::vector<char> seen(group.order(), 0);
  for (Element g = 0; g < group.order(); ++g) {
    const Element p = group.pow(g, m);
    if (!seen[p]) {
      seen[p] = 1;
      powers.push_back(p);
    }
  }
  auto s = generate(group, powers);
  if (!is_normal(s)) {
    throw Error(ErrorKind::kInternalContradiction, "verbal subgroup failed normality check");
  }
  return NormalSubgroup(kTrusted, group, std::vector<Element>(s.members().begin(), s.members().end()));
}

}  // namespace kschmidt
