#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "kschmidt/constructions.hpp"
#include "kschmidt/error.hpp"
#include "kschmidt/named.hpp"

namespace kschmidt {

inline void PrintTo(ErrorKind kind, std::ostream* os) { *os << error_kind_name(kind); }

}  // namespace kschmidt

namespace kschmidt::test {

inline FiniteGroup named(std::string_view spec) { return named_group(spec); }

inline std::vector<Element> members(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

inline std::vector<Element> images(const GroupHom& f) { return {f.images().begin(), f.images().end()}; }

// x -> k·x on a cyclic group given as residues.
inline GroupHom multiply_by(const FiniteGroup& cyclic, std::uint64_t k) {
  std::vector<Element> img(cyclic.order());
  for (std::size_t x = 0; x < cyclic.order(); ++x) img[x] = static_cast<Element>((k * x) % cyclic.order());
  return GroupHom::verified(cyclic, cyclic, img);
}

inline std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a kschmidt::Error";
  return ErrorKind::kInternalContradiction;
}

}  // namespace kschmidt::test
