#include "bennequin/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "bennequin/bounds.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/front.hpp"

namespace bennequin {

namespace {

void record_failure(SuiteResult& result, std::string message) {
  ++result.failures;
  if (static_cast<int>(result.failure_messages.size()) <
      kMaxRecordedFailures) {
    result.failure_messages.push_back(std::move(message));
  }
}

std::string num(long long v) { return std::to_string(v); }

}  // namespace

SuiteResult run_torus_equality_suite(int max_q) {
  SuiteResult result{"torus-equality", 0, 0, {}};
  for (int q = 3; q <= max_q; ++q) {
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++result.checks;
      BraidWord braid = torus_braid(p, q);
      long long expected = static_cast<long long>(p - 1) * (q - 1) - 1;
      long long sl = self_linking(braid);
      long long closed_form = torus_knot_invariants(p, q).s_sharp;
      if (sl != expected || closed_form != expected ||
          !is_knot_closure(braid)) {
        record_failure(result, "T(" + num(p) + "," + num(q) + "): sl = " +
                                   num(sl) + ", closed form = " +
                                   num(closed_form) + ", expected " +
                                   num(expected));
      }
    }
  }
  return result;
}

SuiteResult run_cobordism_chain_suite(int samples, std::uint64_t seed) {
  SuiteResult result{"cobordism-chain", 0, 0, {}};
  SampleRng rng(seed);
  for (int i = 0; i < samples; ++i) {
    ++result.checks;
    BraidWord word = random_positive_knot_braid(rng, 8, 40);
    long long expected =
        crossing_counts(word).positive - word.strands();
    bool ok = true;
    std::string detail;
    for (long long l : admissible_torus_parameters(word, 3)) {
      CobordismCheck check = positive_braid_cobordism_check_at(word, l);
      if (check.recovered_bound != expected) {
        ok = false;
        detail = "l = " + num(l) + " recovered " +
                 num(check.recovered_bound) + ", expected " + num(expected);
        break;
      }
    }
    if (ok &&
        positive_braid_cobordism_check(word).l !=
            admissible_torus_parameters(word, 1).front()) {
      ok = false;
      detail = "default l is not the smallest admissible parameter";
    }
    if (!ok) {
      record_failure(result,
                     "braid '" + render(word) + "' (n=" +
                         num(word.strands()) + "): " + detail);
    }
  }
  return result;
}

SuiteResult run_resolution_suite(int samples, std::uint64_t seed) {
  SuiteResult result{"resolution", 0, 0, {}};
  SampleRng rng(seed);
  for (int i = 0; i < samples; ++i) {
    ++result.checks;
    BraidWord word = random_knot_braid(rng, 8, 40);
    CrossingCounts counts = crossing_counts(word);
    ResolutionDecomposition d = resolution_bound_decomposition(word);
    PositiveResolution resolved = positive_resolution(word);
    bool ok = d.final_bound == self_linking(word) &&
              d.final_bound == d.positive_bound - 2 * d.switches &&
              d.switches == counts.negative &&
              d.positive_bound ==
                  counts.positive + counts.negative - word.strands() &&
              resolved.switches == d.switches &&
              self_linking(resolved.word) == d.positive_bound;
    if (!ok) {
      record_failure(result,
                     "braid '" + render(word) + "' (n=" +
                         num(word.strands()) + "): positive_bound = " +
                         num(d.positive_bound) + ", switches = " +
                         num(d.switches) + ", final = " + num(d.final_bound) +
                         ", sl = " + num(self_linking(word)));
    }
  }
  return result;
}

SuiteResult run_markov_suite(int samples, std::uint64_t seed) {
  SuiteResult result{"markov", 0, 0, {}};
  SampleRng rng(seed);
  for (int i = 0; i < samples; ++i) {
    ++result.checks;
    BraidWord word = random_braid(rng, 8, 40);
    long long sl = self_linking(word);
    bool ok = true;
    std::string detail;
    if (word.strands() >= 2) {
      int generator = rng.next_in(1, word.strands() - 1);
      if (self_linking(conjugate(word, generator)) != sl) {
        ok = false;
        detail = "conjugation by " + num(generator) + " changed sl";
      }
    }
    if (ok && self_linking(stabilize(word, 1)) != sl) {
      ok = false;
      detail = "positive stabilization changed sl";
    }
    if (ok && self_linking(stabilize(word, -1)) != sl - 2) {
      ok = false;
      detail = "negative stabilization did not drop sl by 2";
    }
    if (ok && word.length() >= 1) {
      int index = rng.next_in(1, static_cast<int>(word.length()));
      if (component_count(crossing_change(
              word, static_cast<std::size_t>(index))) !=
          component_count(word)) {
        ok = false;
        detail = "crossing change at " + num(index) +
                 " changed the component count";
      }
    }
    if (!ok) {
      record_failure(result, "braid '" + render(word) + "' (n=" +
                                 num(word.strands()) + "): " + detail);
    }
  }
  return result;
}

SuiteResult run_pushoff_suite(int samples, std::uint64_t seed) {
  SuiteResult result{"pushoff", 0, 0, {}};
  SampleRng rng(seed);
  for (int i = 0; i < samples; ++i) {
    ++result.checks;
    FrontDiagram front = random_knot_front(rng, 20);
    OrientedFront oriented = orient(front);
    long long tb = thurston_bennequin(oriented);
    long long rot = rotation_number(oriented);
    long long plus = transverse_pushoff_sl(oriented, 1);
    long long minus = transverse_pushoff_sl(oriented, -1);
    OrientedFront reversed = reverse_orientation(oriented);
    bool ok = std::max(plus, minus) == tb + std::llabs(rot) &&
              rotation_number(reversed) == -rot &&
              thurston_bennequin(reversed) == tb;
    if (!ok) {
      record_failure(result, "front '" + render(front) + "': tb = " +
                                 num(tb) + ", rot = " + num(rot) +
                                 ", push-offs " + num(plus) + "/" +
                                 num(minus));
    }
  }
  return result;
}

}  // namespace bennequin
