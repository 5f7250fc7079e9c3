#pragma once

#include <cstddef>
#include <cstdint>

namespace kschmidt {

// Caps shared by the enumerating operations. Exceeding a cap is an error,
// never a silent truncation.
struct Limits {
  std::size_t order_cap = 20000;
  // Largest group whose endomorphisms are enumerated exhaustively.
  std::size_t endo_order_cap = 16;
  // Node cap for isomorphism / homomorphism backtracking.
  std::uint64_t search_nodes = 10'000'000;
};

}  // namespace kschmidt
