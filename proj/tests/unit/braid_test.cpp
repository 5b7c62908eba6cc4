#include <cstdlib>
#include <vector>

#include <doctest.h>

#include "bennequin/braid.hpp"
#include "bennequin/errors.hpp"
#include "bennequin/sampling.hpp"

using namespace bennequin;

namespace {

// Independent component-count oracle: follow each strand's position through
// the word one letter at a time (no image array, no swaps), then count the
// orbits of top position -> bottom position under the closure identification.
int oracle_component_count(const BraidWord& word) {
  int n = word.strands();
  std::vector<int> lands(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    int pos = start;
    for (int letter : word.letters()) {
      int i = std::abs(letter);
      if (pos == i) {
        pos = i + 1;
      } else if (pos == i + 1) {
        pos = i;
      }
    }
    lands[static_cast<std::size_t>(start)] = pos;
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int orbits = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++orbits;
    for (int s = start; !seen[static_cast<std::size_t>(s)];
         s = lands[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = 1;
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("braid parsing accepts signed words and infers strand counts") {
  BraidWord word = BraidWord::parse("1 -2 1");
  CHECK(word.strands() == 3);
  CHECK(word.letters() == std::vector<int>{1, -2, 1});

  CHECK(BraidWord::parse("+1 +1 +1").letters() == std::vector<int>{1, 1, 1});
  CHECK(BraidWord::parse("  1\t2\n1  ").length() == 3);

  BraidWord empty = BraidWord::parse("");
  CHECK(empty.strands() == 1);
  CHECK(empty.length() == 0);

  BraidWord wide = BraidWord::parse("1", 5);
  CHECK(wide.strands() == 5);
}

TEST_CASE("braid parsing rejects malformed words with positioned messages") {
  CHECK_THROWS_AS(BraidWord::parse("1 x"), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("0"), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("1.5"), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("3", 2), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("1", 0), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("99999999999999999999"), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("1 1 1", std::nullopt, 2), parse_error);

  try {
    BraidWord::parse("1 x");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("token 2") != std::string::npos);
  }
}

TEST_CASE("braid construction validates letters against the strand count") {
  CHECK_THROWS_AS(BraidWord(2, {2}), domain_error);
  CHECK_THROWS_AS(BraidWord(2, {0}), domain_error);
  CHECK_THROWS_AS(BraidWord(0, {}), domain_error);
  CHECK(BraidWord(2, {1, -1}).length() == 2);
}

TEST_CASE("render emits the canonical form and round-trips through parse") {
  BraidWord word(3, {1, -2, 1});
  CHECK(render(word) == "1 -2 1");
  CHECK(BraidWord::parse(render(word), word.strands()) == word);
  CHECK(render(BraidWord(1, {})) == "");

  SampleRng rng(11);
  for (int i = 0; i < 100; ++i) {
    BraidWord sample = random_braid(rng, 8, 40);
    CHECK(BraidWord::parse(render(sample), sample.strands()) == sample);
  }
}

TEST_CASE("closure permutation follows the strand-position swaps") {
  Permutation perm = closure_permutation(BraidWord::parse("1 2"));
  CHECK(perm.images() == std::vector<int>{2, 3, 1});
  CHECK(perm.cycle_count() == 1);
  CHECK(perm.cycles() == std::vector<std::vector<int>>{{1, 2, 3}});

  CHECK(closure_permutation(BraidWord::parse("1 1")) ==
        Permutation::identity(2));
  CHECK(component_count(BraidWord::parse("1 1")) == 2);
  CHECK(component_count(BraidWord::parse("1 1 1")) == 1);
  CHECK(component_count(BraidWord(3, {})) == 3);
  CHECK(is_knot_closure(BraidWord(1, {})));

  // The sign-blind permutation makes this 2-component despite its knot-like
  // look: '1 1 2 2 -1' traces to the transposition (1 2).
  CHECK(component_count(BraidWord::parse("1 1 2 2 -1")) == 2);
}

TEST_CASE("component count matches the strand-tracing oracle") {
  SampleRng rng(23);
  for (int i = 0; i < 200; ++i) {
    BraidWord word = random_braid(rng, 8, 40);
    CHECK(component_count(word) == oracle_component_count(word));
  }
}

TEST_CASE("crossing changes and positive resolution preserve components") {
  SampleRng rng(31);
  for (int i = 0; i < 100; ++i) {
    BraidWord word = random_braid(rng, 8, 40);
    int components = component_count(word);
    CHECK(component_count(positive_resolution(word).word) == components);
    if (word.length() > 0) {
      std::size_t index =
          static_cast<std::size_t>(rng.next_in(1, static_cast<int>(word.length())));
      CHECK(component_count(crossing_change(word, index)) == components);
    }
  }
}

TEST_CASE("self-linking is x+ - x- - n") {
  CHECK(self_linking(BraidWord::parse("1 1 1", 2)) == 1);
  CHECK(self_linking(BraidWord(1, {})) == -1);
  CHECK(self_linking(BraidWord::parse("-1 -1 -1", 2)) == -5);

  CrossingCounts counts = crossing_counts(BraidWord::parse("1 -2 1 -2"));
  CHECK(counts.positive == 2);
  CHECK(counts.negative == 2);
}

TEST_CASE("torus braids realize the closed-form self-linking identity") {
  BraidWord t23 = torus_braid(2, 3);
  CHECK(t23.strands() == 2);
  CHECK(t23.letters() == std::vector<int>{1, 1, 1});

  CHECK(torus_braid(3, 2).letters() == std::vector<int>{1, 2, 1, 2});
  CHECK(torus_braid(1, 5).length() == 0);

  // (p-1)q - p = (p-1)(q-1) - 1 for every p, q, coprime or not.
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      CHECK(self_linking(torus_braid(p, q)) ==
            static_cast<long long>(p - 1) * (q - 1) - 1);
    }
  }

  CHECK_THROWS_AS(torus_braid(0, 1), domain_error);
  CHECK_THROWS_AS(torus_braid(3, 4, 5), domain_error);  // 8 letters > cap 5
}

TEST_CASE("positive resolution flips negative letters and counts switches") {
  PositiveResolution resolved = positive_resolution(BraidWord::parse("1 -2 1"));
  CHECK(resolved.word.letters() == std::vector<int>{1, 2, 1});
  CHECK(resolved.switches == 1);

  CHECK(positive_resolution(BraidWord::parse("1 1 1")).switches == 0);

  PositiveResolution negated =
      positive_resolution(BraidWord::parse("-1 -1 -1", 2));
  CHECK(negated.word.letters() == std::vector<int>{1, 1, 1});
  CHECK(negated.switches == 3);
}

TEST_CASE("crossing change negates one letter") {
  CHECK(crossing_change(BraidWord::parse("1 1 1"), 2).letters() ==
        std::vector<int>{1, -1, 1});
  CHECK(crossing_change(BraidWord::parse("-1"), 1).letters() ==
        std::vector<int>{1});
  CHECK_THROWS_AS(crossing_change(BraidWord::parse("1"), 0), domain_error);
  CHECK_THROWS_AS(crossing_change(BraidWord::parse("1"), 2), domain_error);
}

TEST_CASE("Markov moves act on words as specified") {
  BraidWord trefoil = BraidWord::parse("1 1 1", 2);

  BraidWord conjugated = conjugate(trefoil, 1);
  CHECK(conjugated.letters() == std::vector<int>{-1, 1, 1, 1, 1});
  CHECK(self_linking(conjugated) == self_linking(trefoil));
  CHECK_THROWS_AS(conjugate(trefoil, 2), domain_error);
  CHECK_THROWS_AS(conjugate(BraidWord(1, {}), 1), domain_error);

  BraidWord unknot(1, {});
  BraidWord stabilized_up = stabilize(unknot, 1);
  CHECK(stabilized_up.strands() == 2);
  CHECK(stabilized_up.letters() == std::vector<int>{1});
  CHECK(self_linking(stabilized_up) == self_linking(unknot));

  BraidWord stabilized_down = stabilize(unknot, -1);
  CHECK(stabilized_down.letters() == std::vector<int>{-1});
  CHECK(self_linking(stabilized_down) == self_linking(unknot) - 2);
  CHECK_THROWS_AS(stabilize(unknot, 2), domain_error);

  CHECK(mirror(trefoil).letters() == std::vector<int>{-1, -1, -1});
  CHECK(mirror(mirror(trefoil)) == trefoil);
}

TEST_CASE("permutations validate, compose cycles, and count them") {
  CHECK(Permutation::identity(4).cycle_count() == 4);
  CHECK(Permutation({2, 3, 1}).cycle_count() == 1);
  CHECK(Permutation({2, 1, 3}).cycles() ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(Permutation({2, 3, 1}).image_of(3) == 1);
  CHECK_THROWS_AS(Permutation({1, 1}), domain_error);
  CHECK_THROWS_AS(Permutation({0, 1}), domain_error);
  CHECK_THROWS_AS(Permutation({2, 3}), domain_error);
  CHECK_THROWS_AS(Permutation({1}).image_of(2), domain_error);
}
