// One PASS/FAIL line per acceptance criterion. Bounds and time limits are
// fixed here; the process exits nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "kschmidt/finite_images.hpp"
#include "kschmidt/verify/sweeps.hpp"

namespace {

using kschmidt::verify::SweepResult;

struct Criterion {
  const char* label;
  const char* sweep;
  std::uint64_t max_order;
  double time_limit_seconds;  // 0 = none
};

const Criterion kCriteria[] = {
    {"Fitting equivalence, corpus order <= 16", "fitting", 16, 300},
    {"Automorphism/nilpotent dichotomy, indecomposable corpus order <= 16", "dichotomy", 16, 0},
    {"Normal endomorphism closure and idempotent sums, order <= 12", "closure", 12, 0},
    {"Krull-Schmidt uniqueness over all maximal decompositions, order <= 32", "ks-uniqueness", 32, 600},
    {"Cancellation G x A = G x B => A = B, |G x A| <= 48", "cancellation", 48, 0},
    {"(A x B)^m = A^m x B^m, pairs of order <= 48, m <= 12", "verbal-product", 48, 0},
    {"Escaping-factor bound on the tower suite", "w-bound", 216, 0},
    {"Fiber powers are tower images; order law", "prop-shadow", 64, 120},
    {"Oracle agreement on corpus order <= 12", "oracle", 12, 0},
};

constexpr std::size_t kMinFiberSpecs = 5;

// Specs whose fiber power is located as an image of the elementary abelian
// tower, counted independently of the sweep.
std::size_t located_fiber_specs() {
  const auto tower = kschmidt::verify::elementary_abelian_tower(2, 6);
  std::size_t found = 0;
  for (const auto& [name, spec] : kschmidt::verify::elementary_fiber_specs()) {
    const auto fp = kschmidt::fiber_power(spec);
    if (kschmidt::verify_image(tower, fp.group)) ++found;
  }
  return found;
}

}  // namespace

int main() {
  bool all = true;
  for (const auto& c : kCriteria) {
    const auto* info = kschmidt::verify::find_sweep(c.sweep);
    SweepResult r;
    std::string extra;
    bool pass = false;
    if (info) {
      r = kschmidt::verify::run_sweep(*info, c.max_order, {});
      pass = r.ok();
      if (c.time_limit_seconds > 0 && r.seconds >= c.time_limit_seconds) {
        pass = false;
        extra += " over time limit";
      }
      if (std::string(c.sweep) == "prop-shadow") {
        const auto located = located_fiber_specs();
        extra += " specs located " + std::to_string(located) + "/" + std::to_string(kMinFiberSpecs) + " required";
        pass = pass && located >= kMinFiberSpecs;
      }
    } else {
      extra = " sweep missing";
    }
    all = all && pass;
    std::printf("%s  %s  [checks %zu, failures %zu, %.1fs", pass ? "PASS" : "FAIL", c.label, r.checks, r.failures,
                r.seconds);
    if (c.time_limit_seconds > 0) std::printf(" < %.0fs", c.time_limit_seconds);
    std::printf("]%s\n", extra.c_str());
    for (const auto& m : r.messages) std::printf("      %s\n", m.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
