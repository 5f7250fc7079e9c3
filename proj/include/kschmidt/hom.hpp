#pragma once

#include <map>
#include <span>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/subgroup.hpp"

namespace kschmidt {

/// A homomorphism between two enumerated groups, stored as its full image
/// vector. Every instance satisfies f(0) = 0 and f(ab) = f(a)f(b).
class GroupHom {
 public:
  /// Throws Error{kNotAHomomorphism} with a witness pair (a, b) where
  /// f(ab) != f(a)f(b), or Error{kBadParams} on a malformed image vector.
  static GroupHom verified(FiniteGroup source, FiniteGroup target, std::vector<Element> images);

  GroupHom(TrustedTag, FiniteGroup source, FiniteGroup target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  static GroupHom identity(const FiniteGroup& group);
  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  Element operator()(Element a) const noexcept { return images_[a]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_endomorphism() const noexcept { return source_ == target_; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return source_.order() == target_.order() && is_injective(); }
  bool is_identity() const;
  bool is_trivial() const;

  NormalSubgroup kernel() const;
  Subgroup image() const;
  /// Image of a subgroup of the source.
  Subgroup image_of(const Subgroup& subgroup) const;

  /// Inverse of a bijective homomorphism; throws Error{kPreconditionViolated}
  /// otherwise.
  GroupHom inverse() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) noexcept {
    return a.images_ == b.images_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> images_;
};

/// outer ∘ inner. Throws Error{kSourceTargetMismatch} unless
/// inner.target() == outer.source().
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// f^n for an endomorphism; f^0 is the identity.
GroupHom power(const GroupHom& endo, std::size_t n);

/// Extends an assignment on a generating set of `source` to a homomorphism.
/// Throws Error{kNotAHomomorphism} with a witness pair if relations are not
/// respected, and Error{kBadParams} if the keys do not generate `source`.
GroupHom hom_from_images(const FiniteGroup& source, const FiniteGroup& target,
                         const std::map<Element, Element>& generator_images);

}  // namespace kschmidt
