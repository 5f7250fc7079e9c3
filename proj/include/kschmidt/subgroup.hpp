#pragma once

#include <compare>
#include <span>
#include <vector>

#include "kschmidt/group.hpp"

namespace kschmidt {

/// A subgroup of `parent()`, stored as its sorted member set.
/// Ordering is canonical: by order, then lexicographically by members.
class Subgroup {
 public:
  /// Throws Error{kNotASubgroup} unless `members` (any order, duplicates
  /// allowed) is a subgroup of `parent`.
  static Subgroup verified(const FiniteGroup& parent, std::vector<Element> members);

  Subgroup(TrustedTag, FiniteGroup parent, std::vector<Element> sorted_members)
      : parent_(std::move(parent)), members_(std::move(sorted_members)) {}

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool contains(Element g) const noexcept;
  bool contains(const Subgroup& other) const noexcept;
  // One flag per parent element.
  std::vector<char> mask() const;
  // Position of `g` within members(); requires contains(g).
  std::size_t position(Element g) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) noexcept;

 protected:
  FiniteGroup parent_;
  std::vector<Element> members_;
};

class NormalSubgroup : public Subgroup {
 public:
  /// Throws Error{kNotNormal} if some conjugate g m g^-1 escapes.
  static NormalSubgroup verified(const Subgroup& subgroup);
  static NormalSubgroup verified(const FiniteGroup& parent, std::vector<Element> members);

  NormalSubgroup(TrustedTag, FiniteGroup parent, std::vector<Element> sorted_members)
      : Subgroup(kTrusted, std::move(parent), std::move(sorted_members)) {}

  static NormalSubgroup trivial(const FiniteGroup& parent);
  static NormalSubgroup whole(const FiniteGroup& parent);
};

bool is_normal(const Subgroup& subgroup);

/// Subgroup generated by `generators` (closure under multiplication).
Subgroup generate(const FiniteGroup& group, std::span<const Element> generators);

/// Subgroup generated by the union of two member sets.
Subgroup join(const Subgroup& a, const Subgroup& b);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Greedy generating set: repeatedly adds the lowest-index element outside
/// the subgroup generated so far.
std::vector<Element> greedy_generators(const FiniteGroup& group);

/// Orbits under conjugation, each sorted; ordered by least element, so the
/// identity class {0} comes first.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group);

/// Every normal subgroup, obtained by joining normal closures of conjugacy
/// classes. Sorted canonically; includes the trivial and the whole group.
/// Throws Error{kOrderBudgetExceeded} when |G| exceeds limits.order_cap.
std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& group, const Limits& limits = {});

NormalSubgroup center(const FiniteGroup& group);
NormalSubgroup derived_subgroup(const FiniteGroup& group);

/// Subgroup generated by all m-th powers. Always normal.
NormalSubgroup verbal_power_subgroup(const FiniteGroup& group, std::uint64_t m);

}  // namespace kschmidt
