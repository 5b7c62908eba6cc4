#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bennequin/braid.hpp"
#include "bennequin/front.hpp"

namespace bennequin {

// Closed-form invariants of the positive (p,q) torus knot, gcd(p,q) = 1:
// s# = s - 1 = 2*g4 - 1 = sl_max = (p-1)(q-1) - 1.
struct TorusKnotInvariants {
  int p = 0;
  int q = 0;
  long long s_sharp = 0;
  long long s = 0;
  long long g4 = 0;
  long long sl_max = 0;

  bool operator==(const TorusKnotInvariants&) const = default;
};

TorusKnotInvariants torus_knot_invariants(int p, int q);

enum class BoundTarget : std::uint8_t { s_sharp, s, g4, sl_max, s_tilde };
enum class BoundDirection : std::uint8_t { lower, upper };

// Every derivation step cites one of these rules; the serialized names are
// part of the output contract and never change.
enum class Rule : std::uint8_t {
  bennequin_formula,         // sl(braid closure) = x+ - x- - n
  maximal_self_linking,      // any sl value bounds sl_max from below
  transverse_sharp_bound,    // sl(T) <= s#(T) for transverse knots
  legendrian_sharp_bound,    // tb(L) + |rot(L)| <= s#(L) for Legendrian knots
  pushoff_reduction,         // sl(T+-) = tb -+ rot reduces fronts to sl data
  plamenevskaya_shumakovitch,// sl <= s - 1
  genus_bound,               // s, s# <= 2*g4
  slice_bennequin,           // sl <= 2*g4 - 1
  s_tilde_bound,             // sl <= 2*s~ - 1
  s_tilde_comparison,        // |s# - 2*s~| <= 1
  cobordism_hypothesis,      // the cobordism data feeding an inequality step
  cobordism_inequality,      // s#(L2) - s#(L1) <= -chi + |L1| - |L2|
  crossing_change_bound,     // |s#(K+) - s#(K-)| <= 2
  torus_closed_form,         // exact torus-knot values
};

std::string_view rule_name(Rule rule);
std::string_view target_name(BoundTarget target);
std::string_view direction_name(BoundDirection direction);

struct DerivationStep {
  Rule rule;
  std::string detail;  // human-readable instantiation, ASCII only

  bool operator==(const DerivationStep&) const = default;
};

// One certified one-sided bound. For target s_tilde the value stores
// 2 * s_tilde, matching the serialized field name value_times_two (s~ itself
// is a half-integer in general).
struct BoundEntry {
  BoundTarget target;
  BoundDirection direction;
  long long value;
  std::vector<DerivationStep> derivation;

  bool operator==(const BoundEntry&) const = default;
};

struct BoundReport {
  std::string subject;
  std::vector<BoundEntry> bounds;

  bool operator==(const BoundReport&) const = default;
};

// Stable tree-structured text form (field names: subject, target, direction,
// value / value_times_two, derivation). The report form is the subject line
// followed by every entry's form.
std::string to_text(const BoundEntry& entry);
std::string to_text(const BoundReport& report);

// Lower bounds derived from the self-linking number of a knot closure.
// Requires is_knot_closure(word).
BoundReport sharp_bound_from_braid(const BraidWord& word);

// Lower bounds derived from tb and rot of a single-component front via its
// transverse push-offs.
BoundReport sharp_bound_from_front(const OrientedFront& oriented);

// Exact two-sided entries for the (p,q) torus knot.
BoundReport torus_knot_report(int p, int q);

// Data of a connected cobordism between two links: Euler characteristic and
// the component counts of the ends.
struct CobordismData {
  long long chi = 0;
  int components_from = 0;
  int components_to = 0;
};

// Applies s#(L2) - s#(L1) <= -chi + |L1| - |L2| to a known s#(L1): returns
// the induced UPPER bound known + (-chi) + |L1| - |L2| on s#(L2). The
// cobordism hypothesis (every component of the surface meets L1) is
// caller-asserted and recorded in the derivation, never inferred.
BoundEntry cobordism_propagate(long long known_s_sharp_l1,
                               const CobordismData& cobordism);

struct IntegerInterval {
  long long lo = 0;
  long long hi = 0;

  long long width() const noexcept { return hi - lo; }
  bool contains(long long v) const noexcept { return lo <= v && v <= hi; }
  bool operator==(const IntegerInterval&) const = default;
};

// |s#(K+) - s#(K-)| <= 2 applied `switches` times around a known value.
IntegerInterval crossing_change_interval(long long known_s_sharp,
                                         long long switches);

// Positive-braid consistency check: embed the closure of a positive braid
// word (knot closure, x+ = length) into a torus knot via an ascending
// cobordism with parameter l, and recover the Bennequin-type lower bound
// x+ - n from the torus closed form plus the cobordism inequality.
struct CobordismCheck {
  long long l = 0;                // torus parameter used, gcd(n, l) = 1
  long long chi = 0;              // x+ + l - l*n
  long long torus_s_sharp = 0;    // (n-1)(l-1) - 1
  long long recovered_bound = 0;  // torus_s_sharp + chi, must equal x+ - n
};

// Uses the smallest admissible l (smallest l >= max(x+, 1), gcd(n, l) = 1).
CobordismCheck positive_braid_cobordism_check(const BraidWord& word);
CobordismCheck positive_braid_cobordism_check_at(const BraidWord& word,
                                                 long long l);
// The `count` smallest admissible parameters for the check above.
std::vector<long long> admissible_torus_parameters(const BraidWord& word,
                                                   int count);

// Decomposes the bound for an arbitrary knot closure through its positive
// resolution: final = positive_bound - 2 * switches = x+ - x- - n = sl.
struct ResolutionDecomposition {
  long long positive_bound = 0;  // bound for the resolved word: x+ + x- - n
  long long switches = 0;        // x- of the input
  long long final_bound = 0;     // positive_bound - 2*switches = sl

  bool operator==(const ResolutionDecomposition&) const = default;
};

ResolutionDecomposition resolution_bound_decomposition(const BraidWord& word);

// Range of 2*s~ compatible with a known s# (|s# - 2*s~| <= 1), and back.
IntegerInterval two_s_tilde_range_from_sharp(long long s_sharp);
IntegerInterval sharp_range_from_two_s_tilde(long long two_s_tilde);

}  // namespace bennequin
