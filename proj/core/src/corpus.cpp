#include "bennequin/corpus.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "bennequin/bounds.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/errors.hpp"
#include "bennequin/front.hpp"

namespace bennequin {

namespace {

constexpr std::string_view kHeader = "id,kind,strands,word,invariant,value";

[[noreturn]] void fail_row(std::string_view source, int row,
                           const std::string& reason) {
  throw parse_error(std::string(source) + ":" + std::to_string(row) + ": " +
                    reason);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

long long parse_value(std::string_view source, int row,
                      std::string_view field) {
  long long value = 0;
  auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    fail_row(source, row, "invalid value '" + std::string(field) + "'");
  }
  return value;
}

// Computed transverse data of one id's representative, shared by all of the
// id's findings.
struct ComputedInvariants {
  bool knot = false;
  bool from_front = false;
  long long sl = 0;  // for fronts: tb + |rot| of the maximal push-off
};

ComputedInvariants compute_invariants(const CorpusRecord& record) {
  ComputedInvariants computed;
  if (record.kind == RepresentativeKind::braid) {
    BraidWord word = BraidWord::parse(record.word, record.strands);
    computed.knot = is_knot_closure(word);
    if (computed.knot) computed.sl = self_linking(word);
  } else {
    FrontDiagram front = FrontDiagram::parse(record.word);
    computed.from_front = true;
    computed.knot = component_count(front) == 1;
    if (computed.knot) {
      OrientedFront oriented = orient(front);
      long long rot = rotation_number(oriented);
      computed.sl = thurston_bennequin(oriented) + std::llabs(rot);
    }
  }
  return computed;
}

std::string num(long long v) { return std::to_string(v); }

}  // namespace

std::string_view invariant_name(CorpusInvariant invariant) {
  switch (invariant) {
    case CorpusInvariant::s_sharp: return "s_sharp";
    case CorpusInvariant::s: return "s";
    case CorpusInvariant::g4: return "g4";
    case CorpusInvariant::sl_max: return "sl_max";
    case CorpusInvariant::s_tilde_times_two: return "s_tilde_times_two";
  }
  return "unknown_invariant";
}

std::optional<CorpusInvariant> invariant_from_name(std::string_view name) {
  if (name == "s_sharp") return CorpusInvariant::s_sharp;
  if (name == "s") return CorpusInvariant::s;
  if (name == "g4") return CorpusInvariant::g4;
  if (name == "sl_max") return CorpusInvariant::sl_max;
  if (name == "s_tilde_times_two") return CorpusInvariant::s_tilde_times_two;
  return std::nullopt;
}

std::vector<CorpusRecord> parse_corpus_csv(std::string_view text,
                                           std::string_view source_name) {
  std::vector<CorpusRecord> records;
  // Merge bookkeeping: (id, invariant) -> record index, id -> first row.
  std::map<std::pair<std::string, CorpusInvariant>, std::size_t> by_key;
  std::map<std::string, std::size_t> representative_of;

  std::size_t offset = 0;
  int row = 0;
  bool saw_header = false;
  while (offset <= text.size()) {
    std::size_t newline = text.find('\n', offset);
    std::string_view line =
        newline == std::string_view::npos
            ? text.substr(offset)
            : text.substr(offset, newline - offset);
    offset = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++row;
    if (!saw_header) {
      if (line != kHeader) {
        fail_row(source_name, row,
                 "expected header '" + std::string(kHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;

    auto fields = split_fields(line);
    if (fields.size() != 6) {
      fail_row(source_name, row,
               "expected 6 fields, found " + std::to_string(fields.size()));
    }
    CorpusRecord record;
    record.row = row;
    record.id = std::string(fields[0]);
    if (record.id.empty()) fail_row(source_name, row, "empty id");

    if (fields[1] == "braid") {
      record.kind = RepresentativeKind::braid;
    } else if (fields[1] == "front") {
      record.kind = RepresentativeKind::front;
    } else {
      fail_row(source_name, row,
               "unknown kind '" + std::string(fields[1]) +
                   "' (expected braid or front)");
    }

    if (record.kind == RepresentativeKind::braid) {
      int strands = 0;
      auto [end, ec] = std::from_chars(
          fields[2].data(), fields[2].data() + fields[2].size(), strands);
      if (ec != std::errc() || end != fields[2].data() + fields[2].size() ||
          strands < 1) {
        fail_row(source_name, row,
                 "invalid strand count '" + std::string(fields[2]) + "'");
      }
      record.strands = strands;
    } else if (!fields[2].empty()) {
      fail_row(source_name, row, "strands must be blank for fronts");
    }

    record.word = std::string(fields[3]);

    auto invariant = invariant_from_name(fields[4]);
    if (!invariant) {
      fail_row(source_name, row,
               "unknown invariant '" + std::string(fields[4]) + "'");
    }
    record.invariant = *invariant;

    record.value = parse_value(source_name, row, fields[5]);

    try {
      if (record.kind == RepresentativeKind::braid) {
        BraidWord::parse(record.word, record.strands);
      } else {
        FrontDiagram::parse(record.word);
      }
    } catch (const error& e) {
      fail_row(source_name, row,
               "representative does not parse: " + std::string(e.what()));
    }

    auto [rep_it, first_for_id] =
        representative_of.emplace(record.id, records.size());
    if (!first_for_id) {
      const CorpusRecord& seen = records[rep_it->second];
      if (seen.kind != record.kind || seen.strands != record.strands ||
          seen.word != record.word) {
        fail_row(source_name, row,
                 "id '" + record.id +
                     "' has a different representative than row " +
                     std::to_string(seen.row));
      }
    }

    auto [key_it, inserted] = by_key.emplace(
        std::make_pair(record.id, record.invariant), records.size());
    if (!inserted) {
      const CorpusRecord& seen = records[key_it->second];
      if (seen.value != record.value) {
        fail_row(source_name, row,
                 "conflicting value for (" + record.id + ", " +
                     std::string(invariant_name(record.invariant)) +
                     "): row " + std::to_string(seen.row) + " has " +
                     num(seen.value) + ", row " + std::to_string(row) +
                     " has " + num(record.value));
      }
      continue;  // exact duplicate, merged
    }
    records.push_back(std::move(record));
  }
  if (!saw_header) fail_row(source_name, 1, "missing header");
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw parse_error("cannot read corpus file '" + path.string() + "'");
  }
  std::ostringstream contents;
  contents << file.rdbuf();
  return parse_corpus_csv(contents.str(), path.string());
}

std::string render_corpus_csv(const std::vector<CorpusRecord>& records) {
  std::string text = std::string(kHeader) + "\n";
  for (const CorpusRecord& record : records) {
    if (record.id.find_first_of(",\n") != std::string::npos ||
        record.word.find_first_of(",\n") != std::string::npos) {
      throw domain_error("record id/word may not contain commas or newlines "
                         "(id '" + record.id + "')");
    }
    text += record.id;
    text += record.kind == RepresentativeKind::braid ? ",braid," : ",front,";
    if (record.strands) text += std::to_string(*record.strands);
    text += ',';
    text += record.word;
    text += ',';
    text += invariant_name(record.invariant);
    text += ',';
    text += num(record.value);
    text += '\n';
  }
  return text;
}

std::vector<VerificationFinding> verify_corpus(
    const std::vector<CorpusRecord>& records) {
  std::vector<VerificationFinding> findings;
  std::map<std::string, ComputedInvariants> computed_by_id;
  // For the s# vs 2s~ comparison: id -> asserted values, in first-appearance
  // order of the id.
  std::vector<std::string> id_order;
  std::map<std::string, std::pair<std::optional<long long>,
                                  std::optional<long long>>> sharp_and_tilde;

  for (const CorpusRecord& record : records) {
    auto computed_it = computed_by_id.find(record.id);
    if (computed_it == computed_by_id.end()) {
      computed_it =
          computed_by_id.emplace(record.id, compute_invariants(record)).first;
      id_order.push_back(record.id);
    }
    const ComputedInvariants& computed = computed_it->second;

    auto& asserted = sharp_and_tilde[record.id];
    if (record.invariant == CorpusInvariant::s_sharp) {
      asserted.first = record.value;
    } else if (record.invariant == CorpusInvariant::s_tilde_times_two) {
      asserted.second = record.value;
    }

    if (!computed.knot) continue;  // the inequalities are knot statements

    std::string sl_observed =
        computed.from_front ? "sl = " + num(computed.sl) + " (tb + |rot|)"
                            : "sl = " + num(computed.sl);
    auto finding = [&record](std::string inequality, std::string relation,
                             std::string observed, bool holds) {
      return VerificationFinding{record.id, std::move(inequality),
                                 std::move(relation), std::move(observed),
                                 holds ? Verdict::consistent
                                       : Verdict::violated};
    };
    long long sl = computed.sl;
    long long v = record.value;
    switch (record.invariant) {
      case CorpusInvariant::s_sharp:
        if (computed.from_front) {
          findings.push_back(finding(
              std::string(rule_name(Rule::legendrian_sharp_bound)),
              "tb + |rot| <= s_sharp",
              "tb + |rot| = " + num(sl) + ", s_sharp = " + num(v), sl <= v));
        } else {
          findings.push_back(finding(
              std::string(rule_name(Rule::transverse_sharp_bound)),
              "sl <= s_sharp", sl_observed + ", s_sharp = " + num(v),
              sl <= v));
        }
        break;
      case CorpusInvariant::s:
        findings.push_back(finding(
            std::string(rule_name(Rule::plamenevskaya_shumakovitch)),
            "sl <= s - 1", sl_observed + ", s = " + num(v), sl <= v - 1));
        break;
      case CorpusInvariant::g4:
        findings.push_back(finding(
            std::string(rule_name(Rule::genus_bound)), "sl <= 2*g4",
            sl_observed + ", g4 = " + num(v), sl <= 2 * v));
        findings.push_back(finding(
            std::string(rule_name(Rule::slice_bennequin)), "sl <= 2*g4 - 1",
            sl_observed + ", g4 = " + num(v), sl <= 2 * v - 1));
        break;
      case CorpusInvariant::sl_max:
        findings.push_back(finding(
            std::string(rule_name(Rule::maximal_self_linking)),
            "sl <= sl_max", sl_observed + ", sl_max = " + num(v), sl <= v));
        break;
      case CorpusInvariant::s_tilde_times_two:
        findings.push_back(finding(
            std::string(rule_name(Rule::s_tilde_bound)), "sl <= 2*s_tilde - 1",
            sl_observed + ", 2*s_tilde = " + num(v), sl <= v - 1));
        break;
    }
  }

  for (const std::string& id : id_order) {
    const auto& asserted = sharp_and_tilde[id];
    if (!asserted.first || !asserted.second) continue;
    long long sharp = *asserted.first;
    long long doubled = *asserted.second;
    long long gap = sharp - doubled;
    findings.push_back(VerificationFinding{
        id, std::string(rule_name(Rule::s_tilde_comparison)),
        "|s_sharp - 2*s_tilde| <= 1",
        "s_sharp = " + num(sharp) + ", 2*s_tilde = " + num(doubled),
        (gap <= 1 && gap >= -1) ? Verdict::consistent : Verdict::violated});
  }
  return findings;
}

std::vector<CorpusRecord> torus_corpus(int max_q) {
  std::vector<CorpusRecord> records;
  for (int q = 3; q <= max_q; ++q) {
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      TorusKnotInvariants inv = torus_knot_invariants(p, q);
      CorpusRecord base;
      base.id = "t_" + std::to_string(p) + "_" + std::to_string(q);
      base.kind = RepresentativeKind::braid;
      base.strands = p;
      base.word = render(torus_braid(p, q));
      auto add = [&records, &base](CorpusInvariant invariant,
                                   long long value) {
        CorpusRecord record = base;
        record.invariant = invariant;
        record.value = value;
        records.push_back(std::move(record));
      };
      add(CorpusInvariant::s_sharp, inv.s_sharp);
      add(CorpusInvariant::s, inv.s);
      add(CorpusInvariant::g4, inv.g4);
      add(CorpusInvariant::sl_max, inv.sl_max);
    }
  }
  return records;
}

}  // namespace bennequin
