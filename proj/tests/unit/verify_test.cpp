#include <random>

#include <doctest.h>

#include "bennequin/braid.hpp"
#include "bennequin/front.hpp"
#include "bennequin/sampling.hpp"
#include "bennequin/verify.hpp"

using namespace bennequin;

TEST_CASE("sample rng is pinned to mt19937_64 output") {
  SampleRng rng(7);
  std::mt19937_64 reference(7);
  for (int i = 0; i < 8; ++i) CHECK(rng.next() == reference());

  SampleRng ranged(7);
  std::mt19937_64 raw(7);
  for (int i = 0; i < 200; ++i) {
    int value = ranged.next_in(-3, 11);
    CHECK(value == static_cast<int>(raw() % 15) - 3);
    CHECK(value >= -3);
    CHECK(value <= 11);
  }
  CHECK(SampleRng(7).next_in(5, 5) == 5);
}

TEST_CASE("samplers respect their contracts") {
  SampleRng rng(19);
  for (int i = 0; i < 300; ++i) {
    BraidWord any = random_braid(rng, 6, 12);
    CHECK(any.strands() >= 1);
    CHECK(any.strands() <= 6);
    CHECK(any.length() <= 12);

    BraidWord knot = random_knot_braid(rng, 5, 10);
    CHECK(is_knot_closure(knot));

    BraidWord positive = random_positive_knot_braid(rng, 5, 10);
    CHECK(is_knot_closure(positive));
    for (int letter : positive.letters()) CHECK(letter > 0);
  }
  CHECK(random_braid(rng, 1, 10).length() == 0);

  SampleRng front_rng(19);
  for (int i = 0; i < 200; ++i) {
    FrontDiagram front = random_knot_front(front_rng, 20);
    CHECK(front.events().size() <= 20);
    CHECK(component_count(front) == 1);
  }
}

TEST_CASE("samplers are reproducible from the seed") {
  SampleRng a(123), b(123);
  for (int i = 0; i < 50; ++i) {
    CHECK(random_braid(a, 6, 12) == random_braid(b, 6, 12));
  }
  SampleRng c(123), d(124);
  bool diverged = false;
  for (int i = 0; i < 50 && !diverged; ++i) {
    diverged = !(random_braid(c, 6, 12) == random_braid(d, 6, 12));
  }
  CHECK(diverged);
}

TEST_CASE("torus equality suite covers all coprime pairs") {
  SuiteResult result = run_torus_equality_suite(13);
  CHECK(result.suite == "torus-equality");
  CHECK(result.checks == 45);
  CHECK(result.failures == 0);
  CHECK(result.passed());
  CHECK(run_torus_equality_suite(7).checks == 11);
}

TEST_CASE("randomized suites pass at reduced sample counts") {
  SuiteResult cobordism = run_cobordism_chain_suite(60, 7);
  CHECK(cobordism.suite == "cobordism-chain");
  CHECK(cobordism.checks == 60);
  CHECK(cobordism.passed());

  SuiteResult resolution = run_resolution_suite(60, 7);
  CHECK(resolution.suite == "resolution");
  CHECK(resolution.checks == 60);
  CHECK(resolution.passed());

  SuiteResult markov = run_markov_suite(120, 7);
  CHECK(markov.suite == "markov");
  CHECK(markov.checks == 120);
  CHECK(markov.passed());

  SuiteResult pushoff = run_pushoff_suite(60, 7);
  CHECK(pushoff.suite == "pushoff");
  CHECK(pushoff.checks == 60);
  CHECK(pushoff.passed());

  // A different seed exercises different samples and still passes.
  CHECK(run_markov_suite(120, 99).passed());
  CHECK(run_pushoff_suite(60, 99).passed());
  CHECK(run_cobordism_chain_suite(60, 99).passed());
  CHECK(run_resolution_suite(60, 99).passed());
}
