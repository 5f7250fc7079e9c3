#include "kschmidt/hom.hpp"

#include <algorithm>
#include <sstream>

#include "kschmidt/error.hpp"

namespace kschmidt {
namespace {

std::vector<Element> iota_elements(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(i);
  return v;
}

[[noreturn]] void not_a_hom(Element a, Element b) {
  std::ostringstream os;
  os << "f(ab) != f(a)f(b) for (a,b) = (" << a << "," << b << ")";
  throw Error(ErrorKind::kNotAHomomorphism, os.str());
}

}  // namespace

GroupHom GroupHom::verified(FiniteGroup source, FiniteGroup target, std::vector<Element> images) {
  if (images.size() != source.order()) {
    throw Error(ErrorKind::kBadParams, "image vector has length " + std::to_string(images.size()) +
                                           ", expected " + std::to_string(source.order()));
  }
  for (const Element x : images) {
    if (x >= target.order()) {
      throw Error(ErrorKind::kBadParams, "image " + std::to_string(x) + " out of range");
    }
  }
  if (images[0] != 0) {
    throw Error(ErrorKind::kNotAHomomorphism, "identity is not mapped to identity");
  }
  for (Element a = 0; a < source.order(); ++a) {
    for (Element b = 0; b < source.order(); ++b) {
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) not_a_hom(a, b);
    }
  }
  return GroupHom(kTrusted, std::move(source), std::move(target), std::move(images));
}

GroupHom GroupHom::identity(const FiniteGroup& group) {
  return GroupHom(kTrusted, group, group, iota_elements(group.order()));
}

GroupHom GroupHom::trivial(const FiniteGroup& source, const FiniteGroup& target) {
  return GroupHom(kTrusted, source, target, std::vector<Element>(source.order(), 0));
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(target_.order(), 0);
  for (const Element y : images_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const { return image().order() == target_.order(); }

bool GroupHom::is_identity() const {
  if (!is_endomorphism()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool GroupHom::is_trivial() const {
  return std::all_of(images_.begin(), images_.end(), [](Element y) { return y == 0; });
}

NormalSubgroup GroupHom::kernel() const {
  std::vector<Element> k;
  for (Element a = 0; a < images_.size(); ++a) {
    if (images_[a] == 0) k.push_back(a);
  }
  return NormalSubgroup(kTrusted, source_, std::move(k));
}

Subgroup GroupHom::image() const {
  std::vector<Element> im(images_);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup(kTrusted, target_, std::move(im));
}

Subgroup GroupHom::image_of(const Subgroup& subgroup) const {
  std::vector<Element> im;
  im.reserve(subgroup.order());
  for (const Element a : subgroup.members()) im.push_back(images_[a]);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup(kTrusted, target_, std::move(im));
}

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) {
    throw Error(ErrorKind::kPreconditionViolated, "inverse of a non-bijective homomorphism");
  }
  std::vector<Element> inv(images_.size());
  for (Element a = 0; a < images_.size(); ++a) inv[images_[a]] = a;
  return GroupHom(kTrusted, target_, source_, std::move(inv));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(inner.target() == outer.source())) {
    throw Error(ErrorKind::kSourceTargetMismatch, "composition: inner target differs from outer source");
  }
  std::vector<Element> images(inner.source().order());
  for (Element a = 0; a < images.size(); ++a) images[a] = outer(inner(a));
  return GroupHom(kTrusted, inner.source(), outer.target(), std::move(images));
}

GroupHom power(const GroupHom& endo, std::size_t n) {
  if (!endo.is_endomorphism()) {
    throw Error(ErrorKind::kSourceTargetMismatch, "power of a non-endomorphism");
  }
  GroupHom result = GroupHom::identity(endo.source());
  for (std::size_t i = 0; i < n; ++i) result = compose(endo, result);
  return result;
}

GroupHom hom_from_images(const FiniteGroup& source, const FiniteGroup& target,
                         const std::map<Element, Element>& generator_images) {
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> gens;
  std::vector<Element> gen_images;
  for (const auto& [g, h] : generator_images) {
    if (g >= source.order() || h >= target.order()) {
      throw Error(ErrorKind::kBadParams, "generator assignment out of range");
    }
    gens.push_back(g);
    gen_images.push_back(h);
  }
  std::vector<Element> images(source.order(), kUnset);
  images[0] = 0;
  std::vector<Element> reached{0};
  for (std::size_t i = 0; i < reached.size(); ++i) {
    const Element x = reached[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = source.mul(x, gens[j]);
      const Element fy = target.mul(images[x], gen_images[j]);
      if (images[y] == kUnset) {
        images[y] = fy;
        reached.push_back(y);
      } else if (images[y] != fy) {
        not_a_hom(x, gens[j]);
      }
    }
  }
  if (reached.size() != source.order()) {
    throw Error(ErrorKind::kBadParams, "assigned elements do not generate the source group");
  }
  return GroupHom::verified(source, target, std::move(images));
}

}  // namespace kschmidt
