#include "kschmidt/endomorphism.hpp"

#include <algorithm>

#include "hom_search.hpp"
#include "kschmidt/error.hpp"
#include "kschmidt/krull_schmidt.hpp"

namespace kschmidt {
namespace {

void require_endomorphism(const GroupHom& f, const char* what) {
  if (!f.is_endomorphism()) {
    throw Error(ErrorKind::kSourceTargetMismatch, std::string(what) + ": source and target differ");
  }
}

NormalSubgroup image_as_normal(const GroupHom& f) {
  auto im = f.image();
  return NormalSubgroup(kTrusted, f.target(), std::vector<Element>(im.members().begin(), im.members().end()));
}

}  // namespace

bool is_normal_endomorphism(const GroupHom& f) {
  require_endomorphism(f, "is_normal_endomorphism");
  const FiniteGroup& g = f.source();
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (g.conj(a, f(b)) != f(g.conj(a, b))) return false;
    }
  }
  return true;
}

std::optional<GroupHom> endo_sum(const GroupHom& phi, const GroupHom& psi) {
  require_endomorphism(phi, "endo_sum");
  require_endomorphism(psi, "endo_sum");
  if (!(phi.source() == psi.source())) {
    throw Error(ErrorKind::kSourceTargetMismatch, "endo_sum: endomorphisms of different groups");
  }
  const FiniteGroup& g = phi.source();
  std::vector<Element> images(g.order());
  for (Element a = 0; a < g.order(); ++a) images[a] = g.mul(phi(a), psi(a));
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (images[g.mul(a, b)] != g.mul(images[a], images[b])) return std::nullopt;
    }
  }
  return GroupHom(kTrusted, g, g, std::move(images));
}

std::vector<GroupHom> enumerate_endomorphisms(const FiniteGroup& group, bool normal_only, const Limits& limits) {
  if (group.order() > limits.endo_order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded,
                "endomorphism enumeration: order " + std::to_string(group.order()) + " exceeds cap " +
                    std::to_string(limits.endo_order_cap));
  }
  const auto gens = greedy_generators(group);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y = 0; y < group.order(); ++y) {
      if (group.element_order(gens[i]) % group.element_order(y) == 0) candidates[i].push_back(y);
    }
  }
  std::vector<GroupHom> out;
  detail::HomSearch search(group, group, gens, std::move(candidates), /*injective=*/false,
                           limits.search_nodes);
  search.run([&](const std::vector<Element>& images) {
    GroupHom f(kTrusted, group, group, images);
    if (!normal_only || is_normal_endomorphism(f)) out.push_back(std::move(f));
    return false;
  });
  return out;
}

bool is_internal_direct_sum(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  if (a.order() * b.order() != g.order()) return false;
  if (!is_normal(a) || !is_normal(b)) return false;
  if (intersect(a, b).order() != 1) return false;
  std::vector<char> hit(g.order(), 0);
  for (const Element x : a.members()) {
    for (const Element y : b.members()) {
      const Element xy = g.mul(x, y);
      if (xy != g.mul(y, x)) return false;
      hit[xy] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

FittingSplit fitting_decomposition(const GroupHom& f) {
  require_endomorphism(f, "fitting_decomposition");
  if (!is_normal_endomorphism(f)) {
    throw Error(ErrorKind::kNotNormal, "fitting_decomposition requires a normal endomorphism");
  }
  GroupHom current = f;
  auto kernel = current.kernel();
  auto image = image_as_normal(current);
  std::size_t n = 1;
  // Both chains are monotone in a finite group, so one repeat means they are
  // stationary from n onwards.
  while (true) {
    GroupHom next = compose(f, current);
    auto next_kernel = next.kernel();
    auto next_image = image_as_normal(next);
    if (next_kernel == kernel && next_image == image) break;
    current = std::move(next);
    kernel = std::move(next_kernel);
    image = std::move(next_image);
    ++n;
  }
  if (!is_internal_direct_sum(kernel, image)) {
    throw Error(ErrorKind::kInternalContradiction,
                "ker f^" + std::to_string(n) + " and Im f^" + std::to_string(n) +
                    " do not form a direct sum");
  }
  return FittingSplit{std::move(kernel), std::move(image), n};
}

std::string_view endo_kind_name(EndoKind kind) {
  switch (kind) {
    case EndoKind::kAutomorphism: return "Automorphism";
    case EndoKind::kNilpotent: return "Nilpotent";
    case EndoKind::kNeither: return "Neither";
  }
  return "Unknown";
}

EndoClassification classify_normal_endo(const GroupHom& f) {
  const FittingSplit split = fitting_decomposition(f);
  EndoClassification out;
  out.fitting_exponent = split.exponent;
  if (f.is_bijective()) {
    out.kind = EndoKind::kAutomorphism;
  } else if (split.image_part.is_trivial()) {
    out.kind = EndoKind::kNilpotent;
    // The image chain strictly shrinks until it reaches {e} at the exponent.
    out.nilpotency_index = split.exponent;
  } else if (split.kernel_part.is_trivial()) {
    throw Error(ErrorKind::kInternalContradiction, "fⁿ injective but f not bijective");
  } else {
    out.kind = EndoKind::kNeither;
  }
  return out;
}

std::size_t automorphic_summand(std::span<const GroupHom> fs) {
  if (fs.empty()) throw Error(ErrorKind::kPreconditionViolated, "empty summand list");
  const FiniteGroup& g = fs.front().source();
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (!fs[k].is_endomorphism() || !(fs[k].source() == g)) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "summand " + std::to_string(k) + " is not an endomorphism of the common group");
    }
    if (!is_normal_endomorphism(fs[k])) {
      throw Error(ErrorKind::kPreconditionViolated, "summand " + std::to_string(k) + " is not normal");
    }
  }
  if (!is_indecomposable(g)) {
    throw Error(ErrorKind::kPreconditionViolated, "ambient group is decomposable");
  }
  GroupHom partial = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) {
    auto next = endo_sum(partial, fs[k]);
    if (!next) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "partial sum through index " + std::to_string(k) + " is not an endomorphism");
    }
    partial = std::move(*next);
  }
  if (!partial.is_bijective()) {
    throw Error(ErrorKind::kPreconditionViolated, "total sum is not an automorphism");
  }
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (fs[k].is_bijective()) return k;
  }
  throw Error(ErrorKind::kNoAutomorphicSummand,
              "no summand is an automorphism although the sum is one");
}

}  // namespace kschmidt
