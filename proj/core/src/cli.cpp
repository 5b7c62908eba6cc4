#include "bennequin/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bennequin/bounds.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/corpus.hpp"
#include "bennequin/errors.hpp"
#include "bennequin/front.hpp"
#include "bennequin/verify.hpp"
#include "bennequin/version.hpp"

namespace bennequin::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw parse_error("cannot read input file '" + path + "'");
  std::ostringstream contents;
  contents << file.rdbuf();
  return contents.str();
}

ordered_json bounds_json(const BoundReport& report) {
  ordered_json entries = ordered_json::array();
  for (const BoundEntry& bound : report.bounds) {
    ordered_json entry;
    entry["target"] = std::string(target_name(bound.target));
    entry["direction"] = std::string(direction_name(bound.direction));
    if (bound.target == BoundTarget::s_tilde) {
      entry["value_times_two"] = bound.value;
    } else {
      entry["value"] = bound.value;
    }
    ordered_json steps = ordered_json::array();
    for (const DerivationStep& step : bound.derivation) {
      ordered_json one;
      one["rule"] = std::string(rule_name(step.rule));
      one["detail"] = step.detail;
      steps.push_back(std::move(one));
    }
    entry["derivation"] = std::move(steps);
    entries.push_back(std::move(entry));
  }
  return entries;
}

void emit_json(std::ostream& out, const ordered_json& document) {
  out << document.dump(2) << "\n";
}

int run_braid(const std::string& text, std::optional<int> strands, bool json,
              std::ostream& out) {
  BraidWord word = BraidWord::parse(text, strands);
  CrossingCounts counts = crossing_counts(word);
  int components = component_count(word);
  bool knot = components == 1;
  BoundReport report;
  if (knot) {
    report = sharp_bound_from_braid(word);
  } else {
    report.subject = "closure of braid '" + render(word) + "' (n=" +
                     std::to_string(word.strands()) + ")";
  }
  if (json) {
    ordered_json document;
    document["tool_version"] = kToolVersion;
    document["subject"] = report.subject;
    ordered_json invariants;
    invariants["strands"] = word.strands();
    invariants["length"] = word.length();
    invariants["x_plus"] = counts.positive;
    invariants["x_minus"] = counts.negative;
    invariants["components"] = components;
    invariants["is_knot"] = knot;
    invariants["self_linking"] = self_linking(word);
    document["invariants"] = std::move(invariants);
    document["bounds"] = bounds_json(report);
    emit_json(out, document);
    return 0;
  }
  out << "subject: " << report.subject << "\n";
  out << "strands: " << word.strands() << "\n";
  out << "length: " << word.length() << "\n";
  out << "x+: " << counts.positive << "\n";
  out << "x-: " << counts.negative << "\n";
  out << "components: " << components << "\n";
  out << "knot: " << (knot ? "yes" : "no") << "\n";
  out << "sl: " << self_linking(word) << "\n";
  if (knot) {
    for (const BoundEntry& bound : report.bounds) out << to_text(bound);
  } else {
    out << "note: closure is a " << components
        << "-component link; bound derivations require a knot\n";
  }
  return 0;
}

int run_front(const std::string& text, bool json, std::ostream& out) {
  FrontDiagram front = FrontDiagram::parse(text);
  int left_cusps = 0;
  int right_cusps = 0;
  int crossings = 0;
  for (const FrontEvent& event : front.events()) {
    switch (event.kind) {
      case FrontEventKind::left_cusp: ++left_cusps; break;
      case FrontEventKind::right_cusp: ++right_cusps; break;
      case FrontEventKind::crossing: ++crossings; break;
    }
  }
  int components = component_count(front);
  bool knot = components == 1;
  long long tb = 0;
  long long rot = 0;
  long long pushoff_positive = 0;
  long long pushoff_negative = 0;
  BoundReport report;
  if (knot) {
    OrientedFront oriented = orient(front);
    tb = thurston_bennequin(oriented);
    rot = rotation_number(oriented);
    pushoff_positive = transverse_pushoff_sl(oriented, 1);
    pushoff_negative = transverse_pushoff_sl(oriented, -1);
    report = sharp_bound_from_front(oriented);
  } else {
    report.subject = "front '" + render(front) + "'";
  }
  if (json) {
    ordered_json document;
    document["tool_version"] = kToolVersion;
    document["subject"] = report.subject;
    ordered_json invariants;
    invariants["events"] = front.events().size();
    invariants["left_cusps"] = left_cusps;
    invariants["right_cusps"] = right_cusps;
    invariants["crossings"] = crossings;
    invariants["components"] = components;
    invariants["is_knot"] = knot;
    if (knot) {
      invariants["tb"] = tb;
      invariants["rot"] = rot;
      invariants["sl_pushoff_positive"] = pushoff_positive;
      invariants["sl_pushoff_negative"] = pushoff_negative;
    }
    document["invariants"] = std::move(invariants);
    document["bounds"] = bounds_json(report);
    emit_json(out, document);
    return 0;
  }
  out << "subject: " << report.subject << "\n";
  out << "events: " << front.events().size() << "\n";
  out << "left_cusps: " << left_cusps << "\n";
  out << "right_cusps: " << right_cusps << "\n";
  out << "crossings: " << crossings << "\n";
  out << "components: " << components << "\n";
  out << "knot: " << (knot ? "yes" : "no") << "\n";
  if (knot) {
    out << "tb: " << tb << "\n";
    out << "rot: " << rot << "\n";
    out << "sl_pushoff_positive: " << pushoff_positive << "\n";
    out << "sl_pushoff_negative: " << pushoff_negative << "\n";
    for (const BoundEntry& bound : report.bounds) out << to_text(bound);
  } else {
    out << "note: front has " << components
        << " components; invariants require a knot front\n";
  }
  return 0;
}

int run_torus(int p, int q, bool json, std::ostream& out) {
  TorusKnotInvariants inv = torus_knot_invariants(p, q);
  BoundReport report = torus_knot_report(p, q);
  if (json) {
    ordered_json document;
    document["tool_version"] = kToolVersion;
    document["subject"] = report.subject;
    ordered_json invariants;
    invariants["p"] = inv.p;
    invariants["q"] = inv.q;
    invariants["s_sharp"] = inv.s_sharp;
    invariants["s"] = inv.s;
    invariants["g4"] = inv.g4;
    invariants["sl_max"] = inv.sl_max;
    document["invariants"] = std::move(invariants);
    document["bounds"] = bounds_json(report);
    emit_json(out, document);
    return 0;
  }
  out << "subject: " << report.subject << "\n";
  out << "p: " << inv.p << "\n";
  out << "q: " << inv.q << "\n";
  out << "s_sharp: " << inv.s_sharp << "\n";
  out << "s: " << inv.s << "\n";
  out << "g4: " << inv.g4 << "\n";
  out << "sl_max: " << inv.sl_max << "\n";
  for (const BoundEntry& bound : report.bounds) out << to_text(bound);
  return 0;
}

int run_verify(const std::string& suite, int max_q,
               std::optional<int> samples, std::uint64_t seed, bool json,
               std::ostream& out) {
  SuiteResult result;
  ordered_json parameters;
  if (suite == "torus-equality") {
    result = run_torus_equality_suite(max_q);
    parameters["max"] = max_q;
  } else if (suite == "cobordism-chain") {
    int count = samples.value_or(500);
    result = run_cobordism_chain_suite(count, seed);
    parameters["samples"] = count;
    parameters["seed"] = seed;
  } else if (suite == "markov") {
    int count = samples.value_or(1000);
    result = run_markov_suite(count, seed);
    parameters["samples"] = count;
    parameters["seed"] = seed;
  } else {
    int count = samples.value_or(500);
    result = run_pushoff_suite(count, seed);
    parameters["samples"] = count;
    parameters["seed"] = seed;
  }
  if (json) {
    ordered_json document;
    document["tool_version"] = kToolVersion;
    document["subject"] = "verify " + suite;
    document["parameters"] = parameters;
    document["checks"] = result.checks;
    document["failures"] = result.failures;
    document["failure_messages"] = result.failure_messages;
    document["result"] = result.passed() ? "pass" : "fail";
    emit_json(out, document);
  } else {
    out << "suite: " << suite << "\n";
    for (const auto& [key, value] : parameters.items()) {
      out << key << ": " << value << "\n";
    }
    out << "checks: " << result.checks << "\n";
    out << "failures: " << result.failures << "\n";
    for (const std::string& message : result.failure_messages) {
      out << "failure: " << message << "\n";
    }
    out << "result: " << (result.passed() ? "pass" : "fail") << "\n";
  }
  return result.passed() ? 0 : 1;
}

int run_corpus(const std::string& path, bool json, std::ostream& out) {
  std::vector<CorpusRecord> records = load_corpus(path);
  std::vector<VerificationFinding> findings = verify_corpus(records);
  long long violations = std::count_if(
      findings.begin(), findings.end(), [](const VerificationFinding& f) {
        return f.verdict == Verdict::violated;
      });
  if (json) {
    ordered_json document;
    document["tool_version"] = kToolVersion;
    document["subject"] = "corpus " + path;
    document["records"] = records.size();
    ordered_json entries = ordered_json::array();
    for (const VerificationFinding& finding : findings) {
      ordered_json one;
      one["id"] = finding.record_id;
      one["inequality"] = finding.inequality;
      one["relation"] = finding.relation;
      one["observed"] = finding.observed;
      one["verdict"] =
          finding.verdict == Verdict::violated ? "violated" : "consistent";
      entries.push_back(std::move(one));
    }
    document["findings"] = std::move(entries);
    document["violations"] = violations;
    document["result"] = violations == 0 ? "pass" : "fail";
    emit_json(out, document);
  } else {
    out << "corpus: " << path << "\n";
    out << "records: " << records.size() << "\n";
    for (const VerificationFinding& finding : findings) {
      if (finding.verdict == Verdict::violated) {
        out << "[VIOLATION] " << finding.record_id << " "
            << finding.inequality << ": expected " << finding.relation
            << ", observed " << finding.observed << "\n";
      } else {
        out << "[ok] " << finding.record_id << " " << finding.inequality
            << ": " << finding.observed << "\n";
      }
    }
    out << "findings: " << findings.size() << "\n";
    out << "violations: " << violations << "\n";
    out << "result: " << (violations == 0 ? "pass" : "fail") << "\n";
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Bennequin-type bound calculator: classical invariants of braid "
      "closures and Legendrian fronts, with certified lower bounds for "
      "s#, s, and the 4-ball genus",
      "bennequin"};
  app.require_subcommand(1);

  auto* braid_cmd = app.add_subcommand(
      "braid", "Invariants and bounds for a braid closure");
  std::string braid_word;
  std::string braid_file;
  std::optional<int> braid_strands;
  bool braid_json = false;
  auto* braid_word_opt = braid_cmd->add_option(
      "word", braid_word,
      "Braid word: whitespace-separated nonzero integers, k for sigma_k and "
      "-k for its inverse");
  braid_cmd->add_option("--strands", braid_strands,
                        "Strand count (default: max |letter| + 1)");
  auto* braid_file_opt =
      braid_cmd->add_option("--file", braid_file,
                            "Read the braid word from a file");
  braid_file_opt->excludes(braid_word_opt);
  braid_cmd->add_flag("--json", braid_json, "Machine-readable output");

  auto* front_cmd = app.add_subcommand(
      "front", "Invariants and bounds for a Legendrian front diagram");
  std::string front_word;
  std::string front_file;
  bool front_json = false;
  auto* front_word_opt = front_cmd->add_option(
      "word", front_word,
      "Front word: whitespace-separated events L<i> (left cusp), R<i> "
      "(right cusp), X<i> (crossing)");
  auto* front_file_opt =
      front_cmd->add_option("--file", front_file,
                            "Read the front word from a file");
  front_file_opt->excludes(front_word_opt);
  front_cmd->add_flag("--json", front_json, "Machine-readable output");

  auto* torus_cmd = app.add_subcommand(
      "torus", "Exact invariants of the (p,q) torus knot");
  int torus_p = 0;
  int torus_q = 0;
  bool torus_json = false;
  torus_cmd->add_option("p", torus_p, "First parameter")->required();
  torus_cmd->add_option("q", torus_q, "Second parameter")->required();
  torus_cmd->add_flag("--json", torus_json, "Machine-readable output");

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Self-verification suites: torus-equality, cobordism-chain, markov, "
      "pushoff");
  std::string verify_suite;
  int verify_max = 13;
  std::optional<int> verify_samples;
  std::uint64_t verify_seed = kDefaultSeed;
  bool verify_json = false;
  verify_cmd->add_option("suite", verify_suite, "Suite name")->required();
  verify_cmd->add_option("--max", verify_max,
                         "torus-equality: largest q (coprime 2 <= p < q)");
  verify_cmd->add_option("--samples", verify_samples,
                         "Randomized suites: sample count");
  verify_cmd->add_option("--seed", verify_seed,
                         "Randomized suites: PRNG seed");
  verify_cmd->add_flag("--json", verify_json, "Machine-readable output");

  auto* corpus_cmd = app.add_subcommand(
      "corpus", "Check asserted invariant values from a CSV corpus");
  std::string corpus_path;
  bool corpus_json = false;
  corpus_cmd->add_option("path", corpus_path, "Corpus CSV file")->required();
  corpus_cmd->add_flag("--json", corpus_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (braid_cmd->parsed()) {
      std::string text =
          braid_file_opt->count() > 0 ? read_file(braid_file) : braid_word;
      return run_braid(text, braid_strands, braid_json, out);
    }
    if (front_cmd->parsed()) {
      std::string text =
          front_file_opt->count() > 0 ? read_file(front_file) : front_word;
      return run_front(text, front_json, out);
    }
    if (torus_cmd->parsed()) {
      return run_torus(torus_p, torus_q, torus_json, out);
    }
    if (verify_cmd->parsed()) {
      if (verify_suite != "torus-equality" &&
          verify_suite != "cobordism-chain" && verify_suite != "markov" &&
          verify_suite != "pushoff") {
        err << "error: unknown suite '" << verify_suite
            << "' (expected torus-equality, cobordism-chain, markov, or "
               "pushoff)\n";
        return 2;
      }
      return run_verify(verify_suite, verify_max, verify_samples, verify_seed,
                        verify_json, out);
    }
    if (corpus_cmd->parsed()) {
      return run_corpus(corpus_path, corpus_json, out);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}

}  // namespace bennequin::cli
