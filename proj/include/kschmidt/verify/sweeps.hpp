#pragma once

// Invariant sweeps over the named-group corpus and a fixed tower suite.
// Shared by `kschmidt selftest` and the acceptance runner.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kschmidt/finite_images.hpp"
#include "kschmidt/limits.hpp"
#include "kschmidt/tower.hpp"

namespace kschmidt::verify {

struct SweepResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool ok() const noexcept { return failures == 0 && checks > 0; }
  void check(bool condition, const std::string& what);
};

using SweepFn = std::function<SweepResult(std::uint64_t max_order, const Limits& limits)>;

struct SweepInfo {
  std::string name;
  std::string description;
  std::uint64_t default_max_order;
  SweepFn run;
};

/// All sweeps in a fixed order.
std::span<const SweepInfo> sweeps();
const SweepInfo* find_sweep(const std::string& name);

/// Runs one sweep with `max_order` (0 = its default) and records timing.
SweepResult run_sweep(const SweepInfo& info, std::uint64_t max_order, const Limits& limits);

// Tower builders used by the sweeps and the tests.

/// [C_{n_1} <- C_{n_2} <- ...] with x -> x mod n_k; each n_k must divide
/// n_{k+1}.
ProfiniteTower cyclic_tower(std::span<const std::uint64_t> moduli);

/// [C_p <- C_p^2 <- ... <- C_p^rank], each map dropping the last coordinate.
ProfiniteTower elementary_abelian_tower(std::uint64_t p, std::size_t rank);

/// Verbal quotients of C_{2^depth} x C_{3^depth} by exponents 6, 36, ...
ProfiniteTower cyclic_product_tower(std::size_t depth);

struct NamedTower {
  std::string name;
  ProfiniteTower tower;
};

std::vector<NamedTower> tower_suite();

struct NamedFiberSpec {
  std::string name;
  FiberPowerSpec spec;
};

/// Fiber-power specs over elementary abelian 2-groups, each with order at
/// most 64.
std::vector<NamedFiberSpec> elementary_fiber_specs();

}  // namespace kschmidt::verify
