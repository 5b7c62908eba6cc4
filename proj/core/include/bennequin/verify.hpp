#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bennequin/sampling.hpp"

namespace bennequin {

inline constexpr int kMaxRecordedFailures = 8;

// Outcome of one self-verification suite: checks counts sampled objects (all
// assertions for one sample bundled into one check).
struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_messages;  // capped at kMaxRecordedFailures

  bool passed() const noexcept { return failures == 0; }
};

// Exact torus identities sl(torus_braid(p,q)) == (p-1)(q-1)-1 ==
// torus_knot_invariants(p,q).s_sharp for every coprime 2 <= p < q <= max_q.
SuiteResult run_torus_equality_suite(int max_q = 13);

// Random positive knot braids (n <= 8, length <= 40): the cobordism route
// recovers x+ - n for each of the three smallest admissible torus parameters.
SuiteResult run_cobordism_chain_suite(int samples = 500,
                                      std::uint64_t seed = kDefaultSeed);

// Random knot braids: resolution decomposition reproduces sl and its
// positive_bound - 2*switches arithmetic.
SuiteResult run_resolution_suite(int samples = 500,
                                 std::uint64_t seed = kDefaultSeed);

// Random braids: sl invariant under conjugation and positive stabilization,
// drops by 2 under negative stabilization; component count invariant under
// crossing changes.
SuiteResult run_markov_suite(int samples = 1000,
                             std::uint64_t seed = kDefaultSeed);

// Random knot fronts (<= 20 events): push-off maximum equals tb + |rot|;
// orientation reversal negates rot and fixes tb.
SuiteResult run_pushoff_suite(int samples = 500,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace bennequin
