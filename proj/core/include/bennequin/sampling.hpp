#pragma once

#include <cstdint>
#include <random>

#include "bennequin/braid.hpp"
#include "bennequin/front.hpp"

namespace bennequin {

inline constexpr std::uint64_t kDefaultSeed = 7;

// Deterministic sampler for the randomized suites: MT19937-64 with plain
// modulo reduction. std::uniform_int_distribution is implementation-defined,
// so it is deliberately avoided — a fixed seed must reproduce the same
// samples on every platform. Modulo bias is negligible at these range sizes
// and irrelevant to the identities being checked.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish integer in [lo, hi], inclusive; requires lo <= hi.
  int next_in(int lo, int hi);

  bool next_bool() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Random word: 1..max_strands strands, 0..max_length letters, uniform signed
// generators. One strand forces the empty word.
BraidWord random_braid(SampleRng& rng, int max_strands, int max_length);

// Rejection-sampled variants whose closure is a knot.
BraidWord random_knot_braid(SampleRng& rng, int max_strands, int max_length);
BraidWord random_positive_knot_braid(SampleRng& rng, int max_strands,
                                     int max_length);

// Rejection-sampled single-component front with at most max_events events:
// grows a random valid event word (closing cusps forced when the remaining
// budget requires it), then keeps it if connected. Requires max_events >= 2.
FrontDiagram random_knot_front(SampleRng& rng, int max_events);

}  // namespace bennequin
