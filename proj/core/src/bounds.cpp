#include "bennequin/bounds.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "bennequin/errors.hpp"

namespace bennequin {

namespace {

std::string num(long long v) { return std::to_string(v); }

// ceil(a / 2) under C++ truncating division, correct for negative a.
long long ceil_half(long long a) {
  if (a % 2 == 0) return a / 2;
  return a > 0 ? a / 2 + 1 : a / 2;
}

// The downstream chain shared by braid and front reports: given sl (for a
// front, the maximal push-off self-linking) and the entry-specific first
// steps, derive lower bounds for s#, sl_max, s, g4 (both branches), s~.
void append_sl_chain(std::vector<BoundEntry>& bounds,
                     const DerivationStep& base, Rule sharp_rule,
                     long long sl) {
  auto entry = [&base](BoundTarget target, long long value,
                       DerivationStep step) {
    return BoundEntry{target, BoundDirection::lower, value,
                      {base, std::move(step)}};
  };
  bounds.push_back(entry(
      BoundTarget::s_sharp, sl,
      {sharp_rule, (sharp_rule == Rule::legendrian_sharp_bound
                        ? "tb + |rot| <= s#: s# >= " + num(sl)
                        : "sl <= s# for the transverse closure: s# >= " +
                              num(sl))}));
  bounds.push_back(
      entry(BoundTarget::sl_max, sl,
            {Rule::maximal_self_linking,
             "any representative's sl bounds sl_max: sl_max >= " + num(sl)}));
  bounds.push_back(entry(BoundTarget::s, sl + 1,
                         {Rule::plamenevskaya_shumakovitch,
                          "sl <= s - 1: s >= " + num(sl + 1)}));
  bounds.push_back(
      entry(BoundTarget::g4, ceil_half(sl),
            {Rule::genus_bound, "sl <= s# <= 2*g4: g4 >= ceil(" + num(sl) +
                                    "/2) = " + num(ceil_half(sl))}));
  bounds.push_back(
      entry(BoundTarget::g4, ceil_half(sl + 1),
            {Rule::slice_bennequin,
             "sl <= 2*g4 - 1: g4 >= ceil(" + num(sl + 1) + "/2) = " +
                 num(ceil_half(sl + 1))}));
  bounds.push_back(entry(BoundTarget::s_tilde, sl + 1,
                         {Rule::s_tilde_bound,
                          "sl <= 2*s~ - 1: 2*s~ >= " + num(sl + 1)}));
}

}  // namespace

TorusKnotInvariants torus_knot_invariants(int p, int q) {
  if (p < 1 || q < 1) {
    throw domain_error("torus knot parameters must be positive, got p=" +
                       std::to_string(p) + " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw domain_error("torus knot parameters must be coprime, got p=" +
                       std::to_string(p) + " q=" + std::to_string(q) +
                       " with gcd " + std::to_string(std::gcd(p, q)));
  }
  long long product = static_cast<long long>(p - 1) * (q - 1);
  // product is even: coprime p, q are never both even.
  return {p, q, product - 1, product, product / 2, product - 1};
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::bennequin_formula: return "bennequin_formula";
    case Rule::maximal_self_linking: return "maximal_self_linking";
    case Rule::transverse_sharp_bound: return "transverse_sharp_bound";
    case Rule::legendrian_sharp_bound: return "legendrian_sharp_bound";
    case Rule::pushoff_reduction: return "pushoff_reduction";
    case Rule::plamenevskaya_shumakovitch: return "plamenevskaya_shumakovitch";
    case Rule::genus_bound: return "genus_bound";
    case Rule::slice_bennequin: return "slice_bennequin";
    case Rule::s_tilde_bound: return "s_tilde_bound";
    case Rule::s_tilde_comparison: return "s_tilde_comparison";
    case Rule::cobordism_hypothesis: return "cobordism_hypothesis";
    case Rule::cobordism_inequality: return "cobordism_inequality";
    case Rule::crossing_change_bound: return "crossing_change_bound";
    case Rule::torus_closed_form: return "torus_closed_form";
  }
  return "unknown_rule";
}

std::string_view target_name(BoundTarget target) {
  switch (target) {
    case BoundTarget::s_sharp: return "s_sharp";
    case BoundTarget::s: return "s";
    case BoundTarget::g4: return "g4";
    case BoundTarget::sl_max: return "sl_max";
    case BoundTarget::s_tilde: return "s_tilde";
  }
  return "unknown_target";
}

std::string_view direction_name(BoundDirection direction) {
  return direction == BoundDirection::lower ? "lower" : "upper";
}

std::string to_text(const BoundEntry& entry) {
  std::string text = "bound:\n";
  text += "  target: " + std::string(target_name(entry.target)) + "\n";
  text +=
      "  direction: " + std::string(direction_name(entry.direction)) + "\n";
  text += (entry.target == BoundTarget::s_tilde ? "  value_times_two: "
                                                : "  value: ") +
          num(entry.value) + "\n";
  text += "  derivation:\n";
  for (const DerivationStep& step : entry.derivation) {
    text += "    - " + std::string(rule_name(step.rule)) + ": " + step.detail +
            "\n";
  }
  return text;
}

std::string to_text(const BoundReport& report) {
  std::string text = "subject: " + report.subject + "\n";
  for (const BoundEntry& bound : report.bounds) text += to_text(bound);
  return text;
}

BoundReport sharp_bound_from_braid(const BraidWord& word) {
  int components = component_count(word);
  if (components != 1) {
    throw domain_error("braid closure has " + std::to_string(components) +
                       " components; this operation requires a knot closure");
  }
  CrossingCounts counts = crossing_counts(word);
  long long sl = self_linking(word);
  BoundReport report;
  report.subject = "closure of braid '" + render(word) + "' (n=" +
                   std::to_string(word.strands()) + ")";
  DerivationStep base{Rule::bennequin_formula,
                      "sl = x+ - x- - n = " + num(counts.positive) + " - " +
                          num(counts.negative) + " - " +
                          num(word.strands()) + " = " + num(sl)};
  append_sl_chain(report.bounds, base, Rule::transverse_sharp_bound, sl);
  return report;
}

BoundReport sharp_bound_from_front(const OrientedFront& oriented) {
  long long tb = thurston_bennequin(oriented);
  long long rot = rotation_number(oriented);
  long long sl = tb + std::llabs(rot);
  BoundReport report;
  report.subject = "front '" + render(oriented.diagram()) + "'";
  DerivationStep base{Rule::pushoff_reduction,
                      "max push-off sl = tb + |rot| = " + num(tb) + " + " +
                          num(std::llabs(rot)) + " = " + num(sl)};
  append_sl_chain(report.bounds, base, Rule::legendrian_sharp_bound, sl);
  return report;
}

BoundReport torus_knot_report(int p, int q) {
  TorusKnotInvariants inv = torus_knot_invariants(p, q);
  std::string name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  BoundReport report;
  report.subject = "torus knot " + name;
  auto exact = [&report, &name](BoundTarget target, std::string_view symbol,
                                long long value) {
    DerivationStep step{Rule::torus_closed_form, std::string(symbol) + "(" +
                                                     name + ") = " +
                                                     num(value) + " exactly"};
    report.bounds.push_back(
        BoundEntry{target, BoundDirection::lower, value, {step}});
    report.bounds.push_back(
        BoundEntry{target, BoundDirection::upper, value, {step}});
  };
  exact(BoundTarget::s_sharp, "s#", inv.s_sharp);
  exact(BoundTarget::s, "s", inv.s);
  exact(BoundTarget::g4, "g4", inv.g4);
  exact(BoundTarget::sl_max, "sl_max", inv.sl_max);
  DerivationStep closed{Rule::torus_closed_form,
                        "s#(" + name + ") = " + num(inv.s_sharp) + " exactly"};
  DerivationStep compare{
      Rule::s_tilde_comparison,
      "|s# - 2*s~| <= 1: 2*s~ in [" + num(inv.s_sharp - 1) + ", " +
          num(inv.s_sharp + 1) + "]"};
  report.bounds.push_back(BoundEntry{BoundTarget::s_tilde,
                                     BoundDirection::lower,
                                     inv.s_sharp - 1,
                                     {closed, compare}});
  report.bounds.push_back(BoundEntry{BoundTarget::s_tilde,
                                     BoundDirection::upper,
                                     inv.s_sharp + 1,
                                     {closed, compare}});
  return report;
}

BoundEntry cobordism_propagate(long long known_s_sharp_l1,
                               const CobordismData& cobordism) {
  if (cobordism.components_from < 1 || cobordism.components_to < 1) {
    throw domain_error("cobordism end component counts must be positive");
  }
  long long delta = -cobordism.chi + cobordism.components_from -
                    cobordism.components_to;
  long long value = known_s_sharp_l1 + delta;
  return BoundEntry{
      BoundTarget::s_sharp,
      BoundDirection::upper,
      value,
      {{Rule::cobordism_hypothesis,
        "caller asserts every surface component has boundary in L1 (chi = " +
            num(cobordism.chi) + ", |L1| = " +
            num(cobordism.components_from) + ", |L2| = " +
            num(cobordism.components_to) + ")"},
       {Rule::cobordism_inequality,
        "s#(L2) - s#(L1) <= -chi + |L1| - |L2|: s#(L2) <= " +
            num(known_s_sharp_l1) + " + " + num(delta) + " = " + num(value)}}};
}

IntegerInterval crossing_change_interval(long long known_s_sharp,
                                         long long switches) {
  if (switches < 0) {
    throw domain_error("switch count must be nonnegative, got " +
                       num(switches));
  }
  return {known_s_sharp - 2 * switches, known_s_sharp + 2 * switches};
}

namespace {

// Shared precondition check for the positive-braid cobordism route.
CrossingCounts require_positive_knot(const BraidWord& word) {
  CrossingCounts counts = crossing_counts(word);
  if (counts.negative != 0) {
    throw domain_error("braid word has " + num(counts.negative) +
                       " negative letters; this check requires a positive "
                       "braid");
  }
  int components = component_count(word);
  if (components != 1) {
    throw domain_error("braid closure has " + std::to_string(components) +
                       " components; this check requires a knot closure");
  }
  return counts;
}

}  // namespace

CobordismCheck positive_braid_cobordism_check_at(const BraidWord& word,
                                                 long long l) {
  CrossingCounts counts = require_positive_knot(word);
  long long n = word.strands();
  long long floor_l = counts.positive > 1 ? counts.positive : 1;
  if (l < floor_l || std::gcd(n, l) != 1) {
    throw domain_error("torus parameter l=" + num(l) +
                       " is not admissible: need l >= max(x+, 1) = " +
                       num(floor_l) + " and gcd(n, l) = 1");
  }
  CobordismCheck check;
  check.l = l;
  check.chi = counts.positive + l - l * n;
  check.torus_s_sharp = (n - 1) * (l - 1) - 1;
  check.recovered_bound = check.torus_s_sharp + check.chi;
  return check;
}

std::vector<long long> admissible_torus_parameters(const BraidWord& word,
                                                   int count) {
  CrossingCounts counts = require_positive_knot(word);
  long long n = word.strands();
  std::vector<long long> values;
  long long l = counts.positive > 1 ? counts.positive : 1;
  while (static_cast<int>(values.size()) < count) {
    if (std::gcd(n, l) == 1) values.push_back(l);
    ++l;
  }
  return values;
}

CobordismCheck positive_braid_cobordism_check(const BraidWord& word) {
  return positive_braid_cobordism_check_at(
      word, admissible_torus_parameters(word, 1).front());
}

ResolutionDecomposition resolution_bound_decomposition(const BraidWord& word) {
  int components = component_count(word);
  if (components != 1) {
    throw domain_error("braid closure has " + std::to_string(components) +
                       " components; this operation requires a knot closure");
  }
  CrossingCounts counts = crossing_counts(word);
  ResolutionDecomposition decomposition;
  decomposition.positive_bound =
      counts.positive + counts.negative - word.strands();
  decomposition.switches = counts.negative;
  decomposition.final_bound =
      decomposition.positive_bound - 2 * decomposition.switches;
  return decomposition;
}

IntegerInterval two_s_tilde_range_from_sharp(long long s_sharp) {
  return {s_sharp - 1, s_sharp + 1};
}

IntegerInterval sharp_range_from_two_s_tilde(long long two_s_tilde) {
  return {two_s_tilde - 1, two_s_tilde + 1};
}

}  // namespace bennequin
