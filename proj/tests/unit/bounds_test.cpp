#include <numeric>
#include <string>
#include <vector>

#include <doctest.h>

#include "bennequin/bounds.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/errors.hpp"
#include "bennequin/front.hpp"
#include "bennequin/sampling.hpp"

using namespace bennequin;

namespace {

const BoundEntry& entry_for(const BoundReport& report, BoundTarget target,
                            BoundDirection direction, int occurrence = 0) {
  int seen = 0;
  for (const BoundEntry& bound : report.bounds) {
    if (bound.target == target && bound.direction == direction) {
      if (seen == occurrence) return bound;
      ++seen;
    }
  }
  FAIL("missing bound entry");
  static BoundEntry unreachable{};
  return unreachable;
}

}  // namespace

TEST_CASE("torus closed forms satisfy the equality chain") {
  TorusKnotInvariants t23 = torus_knot_invariants(2, 3);
  CHECK(t23.s_sharp == 1);
  CHECK(t23.s == 2);
  CHECK(t23.g4 == 1);
  CHECK(t23.sl_max == 1);

  TorusKnotInvariants t35 = torus_knot_invariants(3, 5);
  CHECK(t35.s_sharp == 7);
  CHECK(t35.s == 8);
  CHECK(t35.g4 == 4);
  CHECK(t35.sl_max == 7);

  TorusKnotInvariants unknot = torus_knot_invariants(1, 1);
  CHECK(unknot.s_sharp == -1);
  CHECK(unknot.s == 0);
  CHECK(unknot.g4 == 0);

  for (int q = 3; q <= 13; ++q) {
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      TorusKnotInvariants inv = torus_knot_invariants(p, q);
      CHECK(inv.s_sharp == 2 * inv.g4 - 1);
      CHECK(inv.s_sharp == inv.s - 1);
      CHECK(inv.s_sharp == inv.sl_max);
    }
  }

  CHECK_THROWS_AS(torus_knot_invariants(2, 2), domain_error);
  CHECK_THROWS_AS(torus_knot_invariants(4, 6), domain_error);
  CHECK_THROWS_AS(torus_knot_invariants(0, 3), domain_error);
}

TEST_CASE("braid bound reports chain the Bennequin value downstream") {
  BoundReport report = sharp_bound_from_braid(BraidWord::parse("1 1 1", 2));
  CHECK(report.subject == "closure of braid '1 1 1' (n=2)");
  REQUIRE(report.bounds.size() == 6);

  CHECK(entry_for(report, BoundTarget::s_sharp, BoundDirection::lower).value ==
        1);
  CHECK(entry_for(report, BoundTarget::sl_max, BoundDirection::lower).value ==
        1);
  CHECK(entry_for(report, BoundTarget::s, BoundDirection::lower).value == 2);
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 0).value ==
        1);
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 1).value ==
        1);
  CHECK(entry_for(report, BoundTarget::s_tilde, BoundDirection::lower).value ==
        2);  // stored as 2*s~

  for (const BoundEntry& bound : report.bounds) {
    REQUIRE(!bound.derivation.empty());
    CHECK(bound.derivation.front().rule == Rule::bennequin_formula);
    CHECK(bound.direction == BoundDirection::lower);
  }
  CHECK(entry_for(report, BoundTarget::s_sharp, BoundDirection::lower)
            .derivation.back()
            .rule == Rule::transverse_sharp_bound);

  // Distinct g4 derivations: the s# <= 2*g4 ceiling vs slice-Bennequin.
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 0)
            .derivation.back()
            .rule == Rule::genus_bound);
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 1)
            .derivation.back()
            .rule == Rule::slice_bennequin);
}

TEST_CASE("negative self-linking exercises the signed ceiling branches") {
  BoundReport report =
      sharp_bound_from_braid(BraidWord::parse("-1 -1 -1", 2));  // sl = -5
  CHECK(entry_for(report, BoundTarget::s_sharp, BoundDirection::lower).value ==
        -5);
  CHECK(entry_for(report, BoundTarget::s, BoundDirection::lower).value == -4);
  // ceil(-5/2) = -2 and ceil(-4/2) = -2: both branches agree on odd sl.
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 0).value ==
        -2);
  CHECK(entry_for(report, BoundTarget::g4, BoundDirection::lower, 1).value ==
        -2);
  CHECK(entry_for(report, BoundTarget::s_tilde, BoundDirection::lower).value ==
        -4);
}

TEST_CASE("bound reports require knot closures") {
  CHECK_THROWS_AS(sharp_bound_from_braid(BraidWord::parse("1 1")),
                  domain_error);
  CHECK_THROWS_AS(sharp_bound_from_braid(BraidWord::parse("1 1 2 2 -1")),
                  domain_error);
  CHECK_THROWS_AS(sharp_bound_from_braid(BraidWord(2, {})), domain_error);
  CHECK_THROWS_AS(resolution_bound_decomposition(BraidWord::parse("1 1")),
                  domain_error);
}

TEST_CASE("front bound reports reduce through the push-off") {
  BoundReport trefoil = sharp_bound_from_front(
      orient(FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1")));
  CHECK(trefoil.subject == "front 'L1 L3 X2 X2 X2 R1 R1'");
  CHECK(entry_for(trefoil, BoundTarget::s_sharp, BoundDirection::lower)
            .value == torus_knot_invariants(2, 3).s_sharp);
  CHECK(entry_for(trefoil, BoundTarget::s_sharp, BoundDirection::lower)
            .derivation.front()
            .rule == Rule::pushoff_reduction);
  CHECK(entry_for(trefoil, BoundTarget::s_sharp, BoundDirection::lower)
            .derivation.back()
            .rule == Rule::legendrian_sharp_bound);

  BoundReport saucer =
      sharp_bound_from_front(orient(FrontDiagram::parse("L1 R1")));
  CHECK(entry_for(saucer, BoundTarget::s_sharp, BoundDirection::lower).value ==
        -1);

  BoundReport fish =
      sharp_bound_from_front(orient(FrontDiagram::parse("L1 X1 R1")));
  CHECK(entry_for(fish, BoundTarget::s_sharp, BoundDirection::lower).value ==
        -1);  // tb + |rot| = -2 + 1
}

TEST_CASE("cobordism propagation applies the inequality verbatim") {
  BoundEntry identity_like = cobordism_propagate(1, {0, 1, 1});
  CHECK(identity_like.value == 1);
  CHECK(identity_like.target == BoundTarget::s_sharp);
  CHECK(identity_like.direction == BoundDirection::upper);
  REQUIRE(identity_like.derivation.size() == 2);
  CHECK(identity_like.derivation[0].rule == Rule::cobordism_hypothesis);
  CHECK(identity_like.derivation[1].rule == Rule::cobordism_inequality);

  CHECK(cobordism_propagate(7, {-2, 1, 1}).value == 9);

  // A genus-1 knot cobordism read in both directions pins both ends into a
  // width-2 window of each other.
  long long a = 5;
  long long upper_on_l2 = cobordism_propagate(a, {-2, 1, 1}).value;
  CHECK(upper_on_l2 == a + 2);
  long long upper_on_l1 = cobordism_propagate(a, {-2, 1, 1}).value;
  CHECK(upper_on_l1 - 2 == a);

  CHECK_THROWS_AS(cobordism_propagate(0, {0, 0, 1}), domain_error);
}

TEST_CASE("crossing-change intervals widen by 4 per switch and nest") {
  CHECK(crossing_change_interval(1, 0) == IntegerInterval{1, 1});
  CHECK(crossing_change_interval(1, 1) == IntegerInterval{-1, 3});
  CHECK(crossing_change_interval(7, 3) == IntegerInterval{1, 13});
  for (long long switches = 0; switches < 10; ++switches) {
    IntegerInterval inner = crossing_change_interval(4, switches);
    IntegerInterval outer = crossing_change_interval(4, switches + 1);
    CHECK(inner.width() == 4 * switches);
    CHECK(outer.lo <= inner.lo);
    CHECK(inner.hi <= outer.hi);
    CHECK(inner.contains(4));
  }
  CHECK_THROWS_AS(crossing_change_interval(0, -1), domain_error);
}

TEST_CASE("positive braid cobordism check recovers x+ - n") {
  CobordismCheck t23 = positive_braid_cobordism_check(torus_braid(2, 3));
  CHECK(t23.l == 3);
  CHECK(t23.chi == 0);
  CHECK(t23.torus_s_sharp == 1);
  CHECK(t23.recovered_bound == 1);

  CobordismCheck unknot = positive_braid_cobordism_check(BraidWord(1, {}));
  CHECK(unknot.l == 1);
  CHECK(unknot.chi == 0);
  CHECK(unknot.torus_s_sharp == -1);
  CHECK(unknot.recovered_bound == -1);

  BraidWord t34 = torus_braid(3, 4);  // n = 3, x+ = 8
  CobordismCheck check = positive_braid_cobordism_check(t34);
  CHECK(check.l == 8);
  CHECK(check.chi == 8 + 8 - 8 * 3);
  CHECK(check.torus_s_sharp == 2 * 7 - 1);
  CHECK(check.recovered_bound == 8 - 3);

  CHECK(admissible_torus_parameters(torus_braid(2, 3), 3) ==
        std::vector<long long>{3, 5, 7});
  CHECK(positive_braid_cobordism_check_at(t34, 10).recovered_bound == 5);
  CHECK_THROWS_AS(positive_braid_cobordism_check_at(t34, 9), domain_error);
  CHECK_THROWS_AS(positive_braid_cobordism_check_at(t34, 7), domain_error);

  CHECK_THROWS_AS(positive_braid_cobordism_check(BraidWord::parse("1 -2")),
                  domain_error);
  CHECK_THROWS_AS(positive_braid_cobordism_check(BraidWord::parse("1", 3)),
                  domain_error);
}

TEST_CASE("resolution decomposition reproduces the self-linking number") {
  ResolutionDecomposition negated =
      resolution_bound_decomposition(BraidWord::parse("-1 -1 -1", 2));
  CHECK(negated == ResolutionDecomposition{1, 3, -5});

  ResolutionDecomposition positive =
      resolution_bound_decomposition(torus_braid(2, 3));
  CHECK(positive.switches == 0);
  CHECK(positive.final_bound == positive.positive_bound);

  ResolutionDecomposition mixed =
      resolution_bound_decomposition(BraidWord::parse("1 -2"));
  CHECK(mixed == ResolutionDecomposition{-1, 1, -3});
  CHECK(mixed.final_bound == self_linking(BraidWord::parse("1 -2")));
}

TEST_CASE("the torus chain identity holds for arbitrary integers") {
  SampleRng rng(41);
  for (int i = 0; i < 1000; ++i) {
    long long n = rng.next_in(1, 50);
    long long l = rng.next_in(1, 50);
    long long x_plus = rng.next_in(0, 100);
    long long torus_s_sharp = (n - 1) * (l - 1) - 1;
    long long chi = x_plus + l - l * n;
    CHECK(torus_s_sharp + chi == x_plus - n);
  }
}

TEST_CASE("s~ windows mirror the comparison inequality") {
  CHECK(two_s_tilde_range_from_sharp(1) == IntegerInterval{0, 2});
  CHECK(two_s_tilde_range_from_sharp(7) == IntegerInterval{6, 8});
  CHECK(sharp_range_from_two_s_tilde(0) == IntegerInterval{-1, 1});
}

TEST_CASE("torus reports carry two-sided exact entries") {
  BoundReport report = torus_knot_report(3, 5);
  CHECK(report.subject == "torus knot T(3,5)");
  REQUIRE(report.bounds.size() == 10);
  for (BoundTarget target : {BoundTarget::s_sharp, BoundTarget::s,
                             BoundTarget::g4, BoundTarget::sl_max,
                             BoundTarget::s_tilde}) {
    const BoundEntry& lower = entry_for(report, target, BoundDirection::lower);
    const BoundEntry& upper = entry_for(report, target, BoundDirection::upper);
    CHECK(lower.value <= upper.value);
    CHECK(!lower.derivation.empty());
    CHECK(lower.derivation.front().rule == Rule::torus_closed_form);
  }
  CHECK(entry_for(report, BoundTarget::s_tilde, BoundDirection::lower).value ==
        6);
  CHECK(entry_for(report, BoundTarget::s_tilde, BoundDirection::upper).value ==
        8);
  CHECK(entry_for(report, BoundTarget::s_tilde, BoundDirection::lower)
            .derivation.back()
            .rule == Rule::s_tilde_comparison);
}

TEST_CASE("report text form is stable and names every rule") {
  std::string text = to_text(torus_knot_report(2, 3));
  CHECK(text.find("subject: torus knot T(2,3)") == 0);
  CHECK(text.find("  target: s_sharp\n") != std::string::npos);
  CHECK(text.find("  direction: upper\n") != std::string::npos);
  CHECK(text.find("  value_times_two: 0\n") != std::string::npos);
  CHECK(text.find("    - torus_closed_form: ") != std::string::npos);

  std::string braid_text =
      to_text(sharp_bound_from_braid(BraidWord::parse("1 1 1", 2)));
  CHECK(braid_text.find("subject: closure of braid '1 1 1' (n=2)") == 0);
  CHECK(braid_text.back() == '\n');
  CHECK(braid_text.find("    - bennequin_formula: sl = x+ - x- - n = 3 - 0 - "
                        "2 = 1\n") != std::string::npos);

  CHECK(rule_name(Rule::plamenevskaya_shumakovitch) ==
        "plamenevskaya_shumakovitch");
  CHECK(target_name(BoundTarget::s_tilde) == "s_tilde");
  CHECK(direction_name(BoundDirection::lower) == "lower");
}
