#include "kschmidt/verify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kschmidt::oracle {
namespace {

bool less_canonical(const MemberSet& a, const MemberSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Assigns images to elements 1, 2, ... in turn; every triple a·b = c is
// checked as soon as all three images are known.
void map_search(const FiniteGroup& g, const FiniteGroup& h, bool injective,
                const std::function<bool(const std::vector<Element>&)>& visit) {
  const std::size_t n = g.order();
  std::vector<Element> f(n, 0);
  std::vector<char> used(h.order(), 0);
  used[0] = 1;
  std::function<bool(Element)> step = [&](Element x) -> bool {
    if (x == n) return visit(f);
    for (Element y = 0; y < h.order(); ++y) {
      if (injective && used[y]) continue;
      f[x] = y;
      bool ok = true;
      for (Element a = 0; a <= x && ok; ++a) {
        const Element ax = g.mul(a, x), xa = g.mul(x, a);
        if (ax <= x && f[ax] != h.mul(f[a], f[x])) ok = false;
        if (xa <= x && f[xa] != h.mul(f[x], f[a])) ok = false;
        const Element b = g.mul(g.inv(a), x);  // a·b = x
        if (b <= x && f[x] != h.mul(f[a], f[b])) ok = false;
      }
      if (!ok) continue;
      if (injective) used[y] = 1;
      const bool stop = step(x + 1);
      if (injective) used[y] = 0;
      if (stop) return true;
    }
    return false;
  };
  if (n == 1) {
    visit(f);
    return;
  }
  step(1);
}

}  // namespace

std::vector<MemberSet> subgroups(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<signed char> state(n, -1);  // -1 undecided, 0 out, 1 in
  state[0] = 1;
  std::vector<Element> in = {0};
  std::vector<MemberSet> out;
  std::function<void(Element)> step = [&](Element x) {
    if (x == n) {
      out.push_back(in);
      return;
    }
    // x in: products with earlier members must not land on excluded elements.
    {
      state[x] = 1;
      in.push_back(x);
      bool ok = true;
      for (const Element y : in) {
        for (const Element p : {group.mul(x, y), group.mul(y, x)}) {
          if (p < x && state[p] == 0) ok = false;
        }
      }
      if (ok) step(x + 1);
      in.pop_back();
    }
    // x out: no two members may multiply to x.
    {
      state[x] = 0;
      bool ok = true;
      for (const Element y : in) {
        const Element z = group.mul(group.inv(y), x);
        if (z < x && state[z] == 1) ok = false;
      }
      if (ok) step(x + 1);
    }
    state[x] = -1;
  };
  if (n == 1) return {{0}};
  step(1);
  std::sort(out.begin(), out.end(), less_canonical);
  return out;
}

std::vector<MemberSet> normal_subgroups(const FiniteGroup& group) {
  std::vector<MemberSet> out;
  for (auto& s : subgroups(group)) {
    std::vector<char> member(group.order(), 0);
    for (const Element x : s) member[x] = 1;
    bool normal = true;
    for (Element g = 0; g < group.order() && normal; ++g) {
      for (const Element x : s) {
        if (!member[group.mul(group.mul(g, x), group.inv(g))]) {
          normal = false;
          break;
        }
      }
    }
    if (normal) out.push_back(std::move(s));
  }
  return out;
}

bool is_indecomposable(const FiniteGroup& group) {
  const auto subs = subgroups(group);
  for (const auto& a : subs) {
    if (a.size() == 1 || a.size() == group.order()) continue;
    for (const auto& b : subs) {
      if (b.size() == 1 || a.size() * b.size() != group.order()) continue;
      bool ok = true;
      std::set<Element> products;
      for (const Element x : a) {
        for (const Element y : b) {
          if (group.mul(x, y) != group.mul(y, x)) ok = false;
          products.insert(group.mul(x, y));
        }
      }
      if (ok && products.size() == group.order()) return false;
    }
  }
  return true;
}

bool isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  bool found = false;
  map_search(g, h, /*injective=*/true, [&](const std::vector<Element>&) {
    found = true;
    return true;
  });
  return found;
}

std::vector<std::vector<Element>> endomorphisms(const FiniteGroup& group) {
  std::vector<std::vector<Element>> out;
  map_search(group, group, /*injective=*/false, [&](const std::vector<Element>& f) {
    out.push_back(f);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

MemberSet power_subgroup(const FiniteGroup& group, std::uint64_t m) {
  std::set<Element> set;
  for (Element g = 0; g < group.order(); ++g) {
    std::uint64_t order = 1;
    for (Element x = g; x != 0; x = group.mul(x, g)) ++order;
    Element p = 0;
    for (std::uint64_t k = 0; k < m % order; ++k) p = group.mul(p, g);
    set.insert(p);
  }
  set.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> now(set.begin(), set.end());
    for (const Element a : now) {
      for (const Element b : now) grew |= set.insert(group.mul(a, b)).second;
    }
  }
  return MemberSet(set.begin(), set.end());
}

}  // namespace kschmidt::oracle
