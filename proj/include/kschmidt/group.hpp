#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kschmidt/limits.hpp"

namespace kschmidt {

// Index of a group element. Element 0 is always the identity.
using Element = std::uint32_t;

// A permutation of 0..degree-1 given by its image vector.
using Permutation = std::vector<std::uint32_t>;

// Marks constructors whose caller guarantees the group (or homomorphism)
// axioms; used by constructions whose output is a group by construction.
struct TrustedTag {
  explicit TrustedTag() = default;
};
inline constexpr TrustedTag kTrusted{};

/// A fully enumerated finite group given by its Cayley table.
///
/// Copies are cheap: the table is shared and immutable. Two handles compare
/// equal when their tables are equal; `same_as` tests for the identical
/// underlying object.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates every group axiom, associativity included (O(n^3)).
  /// Throws Error{kNotAGroup} naming the first violated axiom and a witness.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::string label = {});

  /// Closes the generated permutation group by breadth-first
  /// multiplication. Elements are indexed in discovery order, identity first.
  /// The product a*b acts as "apply b, then a".
  static FiniteGroup from_permutations(std::size_t degree,
                                       std::span<const Permutation> generators,
                                       std::string label = {},
                                       const Limits& limits = {});

  /// Row-major flat table; only the inverse vector and element orders are
  /// derived. Caller guarantees the axioms.
  FiniteGroup(TrustedTag, std::size_t order, std::vector<Element> table,
              std::string label = {});

  std::size_t order() const noexcept { return data_->order; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  Element conj(Element g, Element x) const noexcept {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  Element commutator(Element a, Element b) const noexcept {  // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element pow(Element a, std::uint64_t k) const noexcept;
  std::size_t element_order(Element a) const noexcept { return data_->element_orders[a]; }

  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order, data_->order};
  }
  std::span<const Element> flat_table() const noexcept { return data_->table; }
  std::span<const Element> inverses() const noexcept { return data_->inverse; }

  bool is_abelian() const noexcept { return data_->abelian; }
  bool is_trivial() const noexcept { return data_->order == 1; }

  const std::string& label() const noexcept { return data_->label; }
  FiniteGroup with_label(std::string label) const;

  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept;

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::size_t> element_orders;
    bool abelian = true;
    std::string label;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<Data> derive(std::size_t order, std::vector<Element> table,
                                      std::string label);

  std::shared_ptr<const Data> data_;
};

}  // namespace kschmidt
