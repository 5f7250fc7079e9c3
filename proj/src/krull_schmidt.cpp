#include "kschmidt/krull_schmidt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kschmidt/endomorphism.hpp"
#include "kschmidt/error.hpp"
#include "kschmidt/isomorphism.hpp"

namespace kschmidt {
namespace {

using Members = std::vector<Element>;
using MemberDecomposition = std::vector<Members>;

struct CanonicalLess {
  bool operator()(const Members& a, const Members& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
  bool operator()(const MemberDecomposition& a, const MemberDecomposition& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
  }
};

[[noreturn]] void not_a_decomposition(const std::string& why) {
  throw Error(ErrorKind::kNotADecomposition, why);
}

Members map_members(const GroupHom& embedding, const Subgroup& s) {
  Members out;
  out.reserve(s.order());
  for (const Element x : s.members()) out.push_back(embedding(x));
  std::sort(out.begin(), out.end());
  return out;
}

InternalDecomposition from_members(const FiniteGroup& group, MemberDecomposition factors) {
  std::sort(factors.begin(), factors.end(), CanonicalLess{});
  std::vector<NormalSubgroup> normal;
  normal.reserve(factors.size());
  for (auto& f : factors) normal.push_back(NormalSubgroup::verified(group, std::move(f)));
  return InternalDecomposition::verified(group, std::move(normal));
}

// Splits the subgroup `s` of `group` along its first complement split, in
// the coordinates of `group`.
MemberDecomposition decompose_members(const FiniteGroup& group, const Subgroup& s, const Limits& limits) {
  if (s.is_trivial()) return {};
  const auto standalone = as_group(s);
  const auto splits = complement_splits(standalone.group, limits);
  if (splits.empty()) return {Members(s.members().begin(), s.members().end())};
  const auto& [n, k] = splits.front();
  auto left = decompose_members(group, Subgroup(kTrusted, group, map_members(standalone.embedding, n)), limits);
  auto right = decompose_members(group, Subgroup(kTrusted, group, map_members(standalone.embedding, k)), limits);
  left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  return left;
}

class AllDecompositions {
 public:
  AllDecompositions(const FiniteGroup& group, const Limits& limits) : group_(group), limits_(limits) {}

  const std::vector<MemberDecomposition>& of(const Members& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::set<MemberDecomposition, CanonicalLess> found;
    if (s.size() > 1) {
      const Subgroup sub(kTrusted, group_, s);
      const auto standalone = as_group(sub);
      const auto splits = complement_splits(standalone.group, limits_);
      if (splits.empty()) found.insert(MemberDecomposition{s});
      for (const auto& [n, k] : splits) {
        const auto& left = of(map_members(standalone.embedding, n));
        const auto& right = of(map_members(standalone.embedding, k));
        for (const auto& l : left) {
          for (const auto& r : right) {
            if (++produced_ > limits_.search_nodes) {
              throw Error(ErrorKind::kSearchBudgetExceeded, "decomposition enumeration exceeded " +
                                                                std::to_string(limits_.search_nodes));
            }
            MemberDecomposition merged = l;
            merged.insert(merged.end(), r.begin(), r.end());
            std::sort(merged.begin(), merged.end(), CanonicalLess{});
            found.insert(std::move(merged));
          }
        }
      }
    } else {
      found.insert(MemberDecomposition{});
    }
    return memo_.emplace(s, std::vector<MemberDecomposition>(found.begin(), found.end())).first->second;
  }

 private:
  const FiniteGroup& group_;
  const Limits& limits_;
  std::uint64_t produced_ = 0;
  std::map<Members, std::vector<MemberDecomposition>> memo_;
};

void require_indecomposable_factors(const InternalDecomposition& d, const char* which, const Limits& limits) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (indecomposability(d.factor_group(i), limits) != Indecomposability::kIndecomposable) {
      not_a_decomposition(std::string(which) + " factor " + std::to_string(i) +
                          " is not a nontrivial indecomposable group");
    }
  }
}

// Greedy isomorphism matching of two lists of standalone groups; returns
// the pairing and witnesses, or nothing if some left entry has no partner.
std::optional<MatchResult> match_groups(const std::vector<FiniteGroup>& left,
                                        const std::vector<FiniteGroup>& right, const Limits& limits) {
  if (left.size() != right.size()) return std::nullopt;
  std::vector<IsoFingerprint> right_fp;
  right_fp.reserve(right.size());
  for (const auto& g : right) right_fp.push_back(fingerprint(g));
  std::vector<char> used(right.size(), 0);
  MatchResult out;
  for (const auto& g : left) {
    const auto fp = fingerprint(g);
    bool matched = false;
    for (std::size_t j = 0; j < right.size() && !matched; ++j) {
      if (used[j] || right_fp[j] != fp) continue;
      if (auto iso = find_isomorphism(g, right[j], limits)) {
        used[j] = 1;
        out.bijection.push_back(j);
        out.witnesses.push_back(std::move(*iso));
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return out;
}

}  // namespace

InternalDecomposition InternalDecomposition::verified(const FiniteGroup& parent,
                                                      std::vector<NormalSubgroup> factors) {
  std::size_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!(factors[i].parent() == parent)) not_a_decomposition("factor " + std::to_string(i) + " has another parent");
    product *= factors[i].order();
    if (product > parent.order()) break;
  }
  if (product != parent.order()) {
    not_a_decomposition("factor orders multiply to " + std::to_string(product) + ", expected " +
                        std::to_string(parent.order()));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      for (const Element a : factors[i].members()) {
        for (const Element b : factors[j].members()) {
          if (parent.mul(a, b) != parent.mul(b, a)) {
            not_a_decomposition("factors " + std::to_string(i) + " and " + std::to_string(j) +
                                " do not commute elementwise");
          }
        }
      }
    }
  }

  InternalDecomposition d;
  d.parent_ = parent;
  const std::size_t r = factors.size();
  constexpr Element kUnset = ~Element{0};
  d.components_.assign(parent.order() * r, kUnset);
  std::vector<char> hit(parent.order(), 0);
  // Mixed-radix walk over all tuples (a_0, ..., a_{r-1}); prefix[i] is the
  // product a_0 ... a_{i-1}.
  std::vector<std::size_t> digit(r, 0);
  std::vector<Element> prefix(r + 1, 0);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = parent.mul(prefix[i], factors[i].members()[digit[i]]);
    const Element p = prefix[r];
    if (hit[p]) not_a_decomposition("element " + std::to_string(p) + " has two factorizations");
    hit[p] = 1;
    for (std::size_t i = 0; i < r; ++i) d.components_[p * r + i] = factors[i].members()[digit[i]];
    bool done = true;
    for (std::size_t pos = r; pos-- > 0;) {
      if (++digit[pos] < factors[pos].order()) {
        done = false;
        break;
      }
      digit[pos] = 0;
    }
    if (done) break;
  }
  d.standalone_.reserve(r);
  for (const auto& f : factors) d.standalone_.push_back(as_group(f));
  d.factors_ = std::move(factors);
  return d;
}

GroupHom InternalDecomposition::projection(std::size_t i) const {
  std::vector<Element> images(parent_.order());
  for (Element g = 0; g < parent_.order(); ++g) {
    images[g] = static_cast<Element>(factors_[i].position(component(g, i)));
  }
  return GroupHom(kTrusted, parent_, standalone_[i].group, std::move(images));
}

GroupHom InternalDecomposition::idempotent(std::size_t i) const {
  std::vector<Element> images(parent_.order());
  for (Element g = 0; g < parent_.order(); ++g) images[g] = component(g, i);
  return GroupHom(kTrusted, parent_, parent_, std::move(images));
}

std::vector<std::pair<NormalSubgroup, NormalSubgroup>> complement_splits(const FiniteGroup& group,
                                                                         const Limits& limits) {
  const auto normals = normal_subgroups(group, limits);
  std::vector<std::pair<NormalSubgroup, NormalSubgroup>> out;
  for (std::size_t a = 0; a < normals.size(); ++a) {
    const auto& n = normals[a];
    if (n.is_trivial() || n.is_whole()) continue;
    if (group.order() % n.order() != 0) continue;
    const std::size_t want = group.order() / n.order();
    std::vector<char> in_n;
    for (std::size_t b = a + 1; b < normals.size(); ++b) {
      const auto& k = normals[b];
      if (k.order() != want) continue;
      if (in_n.empty()) in_n = n.mask();
      const auto overlap = std::count_if(k.members().begin(), k.members().end(),
                                         [&](Element x) { return in_n[x] != 0; });
      if (overlap == 1) out.emplace_back(n, k);
    }
  }
  return out;
}

Indecomposability indecomposability(const FiniteGroup& group, const Limits& limits) {
  if (group.is_trivial()) return Indecomposability::kTrivial;
  return complement_splits(group, limits).empty() ? Indecomposability::kIndecomposable
                                                  : Indecomposability::kDecomposable;
}

bool is_indecomposable(const FiniteGroup& group, const Limits& limits) {
  return indecomposability(group, limits) != Indecomposability::kDecomposable;
}

InternalDecomposition decompose(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded, "decompose: order exceeds cap");
  }
  return from_members(group, decompose_members(group, NormalSubgroup::whole(group), limits));
}

std::vector<InternalDecomposition> all_decompositions(const FiniteGroup& group, const Limits& limits) {
  if (group.order() > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded, "all_decompositions: order exceeds cap");
  }
  AllDecompositions search(group, limits);
  const auto whole = NormalSubgroup::whole(group);
  const auto& found = search.of(Members(whole.members().begin(), whole.members().end()));
  std::vector<InternalDecomposition> out;
  out.reserve(found.size());
  for (const auto& d : found) out.push_back(from_members(group, d));
  return out;
}

MatchResult match_decompositions(const FiniteGroup& group, const InternalDecomposition& d1,
                                 const InternalDecomposition& d2, const Limits& limits) {
  if (!(d1.parent() == group) || !(d2.parent() == group)) {
    not_a_decomposition("decomposition of a different group");
  }
  require_indecomposable_factors(d1, "first", limits);
  require_indecomposable_factors(d2, "second", limits);
  std::vector<FiniteGroup> left, right;
  for (std::size_t i = 0; i < d1.size(); ++i) left.push_back(d1.factor_group(i));
  for (std::size_t j = 0; j < d2.size(); ++j) right.push_back(d2.factor_group(j));
  auto matched = match_groups(left, right, limits);
  if (!matched) {
    throw Error(ErrorKind::kUniquenessViolation,
                "factors of two decompositions into indecomposables could not be paired");
  }
  return std::move(*matched);
}

PropertyPMatch property_p_match(const FiniteGroup& group, const InternalDecomposition& d1,
                                const InternalDecomposition& d2, std::size_t i, const Limits& limits) {
  if (!(d1.parent() == group) || !(d2.parent() == group)) {
    throw Error(ErrorKind::kPreconditionViolated, "decomposition of a different group");
  }
  if (i >= d1.size()) throw Error(ErrorKind::kPreconditionViolated, "factor index out of range");
  const FiniteGroup& h = d1.factor_group(i);
  if (indecomposability(h, limits) != Indecomposability::kIndecomposable) {
    throw Error(ErrorKind::kPreconditionViolated, "factor " + std::to_string(i) +
                                                      " is not nontrivial and indecomposable");
  }
  const GroupHom& psi = d1.inclusion(i);
  const GroupHom pi = d1.projection(i);

  // f_k = π_i ψ'_k π'_k ψ_i, computed through the component table of d2.
  std::vector<GroupHom> fs;
  fs.reserve(d2.size());
  for (std::size_t k = 0; k < d2.size(); ++k) {
    std::vector<Element> images(h.order());
    for (Element x = 0; x < h.order(); ++x) images[x] = pi(d2.component(psi(x), k));
    fs.push_back(GroupHom::verified(h, h, std::move(images)));
  }
  const std::size_t j = automorphic_summand(fs);

  const GroupHom candidate = compose(d2.projection(j), psi);  // π'_j ψ_i : H_i -> G_j
  const GroupHom gamma = fs[j].inverse();
  const GroupHom back = compose(gamma, compose(pi, d2.inclusion(j)));  // γ π_i ψ'_j : G_j -> H_i
  const GroupHom sigma = compose(candidate, back);
  if (!(compose(sigma, sigma) == sigma)) {
    throw Error(ErrorKind::kInternalContradiction, "sigma is not idempotent");
  }
  if (!is_normal_endomorphism(sigma)) {
    throw Error(ErrorKind::kInternalContradiction, "sigma is not a normal endomorphism");
  }
  if (!sigma.is_identity()) {
    throw Error(ErrorKind::kInternalContradiction,
                sigma.is_trivial() ? "sigma is trivial on a nontrivial factor"
                                   : "sigma is neither the identity nor trivial on an indecomposable factor");
  }
  if (!candidate.is_bijective()) {
    throw Error(ErrorKind::kInternalContradiction, "pi'_j psi_i is not bijective");
  }
  return PropertyPMatch{j, GroupHom::verified(candidate.source(), candidate.target(),
                                              std::vector<Element>(candidate.images().begin(),
                                                                   candidate.images().end()))};
}

CancellationResult cancel_factor(const InternalDecomposition& dx, std::size_t x_distinguished,
                                 const InternalDecomposition& dy, std::size_t y_distinguished,
                                 const Limits& limits) {
  const FiniteGroup& x = dx.parent();
  const FiniteGroup& y = dy.parent();
  if (x_distinguished >= dx.size() || y_distinguished >= dy.size()) {
    throw Error(ErrorKind::kPreconditionViolated, "distinguished factor index out of range");
  }
  if (!find_isomorphism(x, y, limits)) {
    throw Error(ErrorKind::kNotIsomorphicAmbient, "X and Y are not isomorphic");
  }
  if (!find_isomorphism(dx.factor_group(x_distinguished), dy.factor_group(y_distinguished), limits)) {
    throw Error(ErrorKind::kPreconditionViolated, "distinguished factors are not isomorphic");
  }

  struct Refined {
    InternalDecomposition full;
    std::vector<char> distinguished;  // per refined factor
    Subgroup complement;
  };
  const auto refine = [&](const InternalDecomposition& d, std::size_t dist) {
    MemberDecomposition members;
    std::vector<std::pair<Members, char>> tagged;
    Members complement_gens;
    for (std::size_t f = 0; f < d.size(); ++f) {
      const auto inner = decompose(d.factor_group(f), limits);
      for (const auto& piece : inner.factors()) {
        tagged.emplace_back(map_members(d.inclusion(f), piece), static_cast<char>(f == dist));
      }
      if (f != dist) complement_gens.insert(complement_gens.end(), d.factors()[f].members().begin(),
                                            d.factors()[f].members().end());
    }
    std::vector<NormalSubgroup> normal;
    std::vector<char> tags;
    for (auto& [m, t] : tagged) {
      normal.push_back(NormalSubgroup::verified(d.parent(), std::move(m)));
      tags.push_back(t);
    }
    auto full = InternalDecomposition::verified(d.parent(), std::move(normal));
    return Refined{std::move(full), std::move(tags), generate(d.parent(), complement_gens)};
  };
  const Refined rx = refine(dx, x_distinguished);
  const Refined ry = refine(dy, y_distinguished);

  std::vector<FiniteGroup> gx, gy, ax, by;
  std::vector<std::size_t> ax_index, by_index;
  for (std::size_t r = 0; r < rx.full.size(); ++r) {
    if (rx.distinguished[r]) {
      gx.push_back(rx.full.factor_group(r));
    } else {
      ax.push_back(rx.full.factor_group(r));
      ax_index.push_back(r);
    }
  }
  for (std::size_t r = 0; r < ry.full.size(); ++r) {
    if (ry.distinguished[r]) {
      gy.push_back(ry.full.factor_group(r));
    } else {
      by.push_back(ry.full.factor_group(r));
      by_index.push_back(r);
    }
  }
  if (!match_groups(gx, gy, limits)) {
    throw Error(ErrorKind::kCancellationFailure, "refined distinguished factors do not match");
  }
  const auto matched = match_groups(ax, by, limits);
  if (!matched) {
    throw Error(ErrorKind::kCancellationFailure, "refined complements do not match after cancelling");
  }

  // a = ∏ components in the refined A-factors; send each through its witness.
  const auto a_group = as_group(rx.complement);
  const auto b_group = as_group(ry.complement);
  std::vector<Element> images(a_group.group.order());
  for (Element ai = 0; ai < a_group.group.order(); ++ai) {
    const Element a = a_group.embedding(ai);
    Element b = 0;
    for (std::size_t t = 0; t < ax_index.size(); ++t) {
      const std::size_t rxf = ax_index[t];
      const std::size_t ryf = by_index[matched->bijection[t]];
      const Element local = static_cast<Element>(rx.full.factors()[rxf].position(rx.full.component(a, rxf)));
      const Element mapped = matched->witnesses[t](local);
      b = y.mul(b, ry.full.inclusion(ryf)(mapped));
    }
    if (!rx.complement.contains(a) || !ry.complement.contains(b)) {
      throw Error(ErrorKind::kCancellationFailure, "assembled map leaves the complements");
    }
    images[ai] = static_cast<Element>(ry.complement.position(b));
  }
  GroupHom iso = [&] {
    try {
      return GroupHom::verified(a_group.group, b_group.group, std::move(images));
    } catch (const Error& e) {
      throw Error(ErrorKind::kCancellationFailure, std::string("assembled map invalid: ") + e.what());
    }
  }();
  if (!iso.is_bijective()) throw Error(ErrorKind::kCancellationFailure, "assembled map is not bijective");
  return CancellationResult{rx.complement, ry.complement, std::move(iso)};
}

}  // namespace kschmidt
