#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsig/constructions.hpp"
#include "stsig/signature.hpp"
#include "stsig/theta.hpp"

namespace stsig {

// Bounds for the exhaustive property sweeps. Defaults match desk-scale
// runtimes (well under a minute).
struct SweepBounds {
  std::int64_t max_parent_sum = 4;
  std::int64_t max_n = 6;
  bool include_arbitrary_theta = true;
  std::uint64_t seed = 1;
  std::int64_t random_theta_count = 1000;
  std::int64_t schreier_max_parent_sum = 3;
  std::int64_t schreier_max_n = 5;
  std::int64_t reducer_max_component = 20;
};

void validate(const SweepBounds& bounds);  // max_parent_sum >= 2, max_n >= 1

// Every valid construction instance with parent sum in [2, max_sum],
// n in [1, max_n] and each twist running over 0..floor(n/2), in a fixed
// deterministic order.
std::vector<ConstructionInstance> enumerate_instances(std::int64_t max_sum,
                                                      std::int64_t max_n);

// Every signature with components <= max_component and sum >= 2, ordered.
std::vector<Signature> enumerate_signatures(std::int64_t max_component);

// Deterministic pseudo-random transitive theta on the given parent: uniform
// generator images, rank-2 pairs as powers of a common permutation (hence
// commuting). Falls back to planting sigma on the first generator if random
// sampling keeps missing transitivity.
ThetaSpec random_theta(const Signature& parent, std::int64_t n, std::uint64_t seed);

struct SuiteResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failure_count = 0;
  std::vector<std::string> failure_samples;  // first few, in enumeration order
};

struct SweepReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

// Runs the five invariant suites: oracle-vs-formula, euler-multiplicativity
// (instances plus random thetas), class-preservation, schreier-reproduction
// and reducer-totality. Items run in parallel (SCHOTTKY_SIG_THREADS caps the
// worker count, 0 or unset means auto); results are aggregated in enumeration
// order, so output is deterministic.
SweepReport run_sweep(const SweepBounds& bounds);

std::string format_report(const SweepReport& report);

int sweep_thread_count();

}  // namespace stsig
