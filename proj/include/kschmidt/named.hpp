#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kschmidt/group.hpp"
#include "kschmidt/limits.hpp"

namespace kschmidt {

/// Inline group description, written `name:p1:p2` or
/// `direct_product(spec,spec,...)`.
///
///   trivial
///   cyclic:n                 residues 0..n-1
///   dihedral:n               order 2n; r^i at i, r^i s at n+i
///   quaternion[:8]           1,-1,i,-i,j,-j,k,-k
///   symmetric:n              permutations of 0..n-1 in lexicographic order
///   elementary_abelian:p:k   row-major product of k copies of cyclic:p
///   direct_product(A,B,...)  row-major, (a,b) at a·|B|+b
struct NamedGroupSpec {
  std::string name;
  std::vector<std::uint64_t> params;
  std::vector<NamedGroupSpec> factors;  // direct_product only

  std::string to_string() const;
  friend bool operator==(const NamedGroupSpec&, const NamedGroupSpec&) = default;
};

/// Throws Error{kUnknownName} or Error{kBadParams}.
NamedGroupSpec parse_named(std::string_view text);

/// Throws Error{kBadParams} for invalid parameters and
/// Error{kOrderBudgetExceeded} beyond limits.order_cap.
FiniteGroup named_group(const NamedGroupSpec& spec, const Limits& limits = {});
FiniteGroup named_group(std::string_view text, const Limits& limits = {});

/// Order without building the group.
std::uint64_t named_order(const NamedGroupSpec& spec);

struct CorpusEntry {
  NamedGroupSpec spec;
  std::uint64_t order = 1;
};

/// Base groups of order <= max_order (trivial; cyclic; elementary abelian of
/// rank >= 2; dihedral:n for n >= 3; quaternion; symmetric:3 and :4)
/// followed by every product of two nontrivial base groups with order <=
/// max_order, each unordered pair once. Sorted by order, then by the base
/// list position.
std::vector<CorpusEntry> corpus(std::uint64_t max_order);

/// The base groups only.
std::vector<CorpusEntry> corpus_bases(std::uint64_t max_order);

}  // namespace kschmidt
