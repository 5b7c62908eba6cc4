#include "bennequin/sampling.hpp"

#include <cstdint>

#include "bennequin/errors.hpp"

namespace bennequin {

namespace {

// Rejection sampling is expected to succeed within a handful of draws; this
// cap only turns a logic bug into a loud failure instead of a hang.
constexpr int kMaxAttempts = 100000;

}  // namespace

int SampleRng::next_in(int lo, int hi) {
  if (lo > hi) {
    throw domain_error("empty sampling range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  std::uint64_t span = static_cast<std::uint64_t>(
      static_cast<long long>(hi) - static_cast<long long>(lo) + 1);
  return static_cast<int>(static_cast<long long>(lo) +
                          static_cast<long long>(next() % span));
}

BraidWord random_braid(SampleRng& rng, int max_strands, int max_length) {
  if (max_strands < 1 || max_length < 0) {
    throw domain_error("invalid sampling limits: max_strands=" +
                       std::to_string(max_strands) + " max_length=" +
                       std::to_string(max_length));
  }
  int strands = rng.next_in(1, max_strands);
  if (strands == 1) return BraidWord(1, {});
  int length = rng.next_in(0, max_length);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    int index = rng.next_in(1, strands - 1);
    letters.push_back(rng.next_bool() ? index : -index);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord random_knot_braid(SampleRng& rng, int max_strands, int max_length) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    BraidWord word = random_braid(rng, max_strands, max_length);
    if (is_knot_closure(word)) return word;
  }
  throw domain_error("knot braid sampling failed to converge");
}

BraidWord random_positive_knot_braid(SampleRng& rng, int max_strands,
                                     int max_length) {
  if (max_strands < 1 || max_length < 0) {
    throw domain_error("invalid sampling limits: max_strands=" +
                       std::to_string(max_strands) + " max_length=" +
                       std::to_string(max_length));
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    int strands = rng.next_in(1, max_strands);
    if (strands == 1) return BraidWord(1, {});
    int length = rng.next_in(0, max_length);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) letters.push_back(rng.next_in(1, strands - 1));
    BraidWord word(strands, std::move(letters));
    if (is_knot_closure(word)) return word;
  }
  throw domain_error("positive knot braid sampling failed to converge");
}

FrontDiagram random_knot_front(SampleRng& rng, int max_events) {
  if (max_events < 2) {
    throw domain_error("front sampling needs max_events >= 2, got " +
                       std::to_string(max_events));
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<FrontEvent> events;
    int strands = 0;
    while (true) {
      int remaining = max_events - static_cast<int>(events.size());
      if (strands == 0) {
        if (!events.empty()) break;  // closed up: candidate diagram complete
        events.push_back({FrontEventKind::left_cusp, rng.next_in(1, 1)});
        strands = 2;
        continue;
      }
      int closing_needed = strands / 2;  // right cusps required to finish
      if (remaining <= closing_needed) {
        events.push_back({FrontEventKind::right_cusp,
                          rng.next_in(1, strands - 1)});
        strands -= 2;
        continue;
      }
      // Weighted choice among the moves that keep closure reachable within
      // the budget; crossings weighted up for more interesting diagrams.
      bool can_left = remaining >= closing_needed + 2;
      int left_weight = can_left ? 2 : 0;
      int cross_weight = 3;
      int right_weight = 2;
      int draw = rng.next_in(1, left_weight + cross_weight + right_weight);
      if (draw <= left_weight) {
        events.push_back({FrontEventKind::left_cusp,
                          rng.next_in(1, strands + 1)});
        strands += 2;
      } else if (draw <= left_weight + cross_weight) {
        events.push_back({FrontEventKind::crossing,
                          rng.next_in(1, strands - 1)});
      } else {
        events.push_back({FrontEventKind::right_cusp,
                          rng.next_in(1, strands - 1)});
        strands -= 2;
      }
    }
    FrontDiagram front(std::move(events));
    if (component_count(front) == 1) return front;
  }
  throw domain_error("knot front sampling failed to converge");
}

}  // namespace bennequin
