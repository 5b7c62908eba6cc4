#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bennequin {

enum class RepresentativeKind : std::uint8_t { braid, front };

// Invariants a corpus may assert. s~ is asserted doubled (s_tilde_times_two)
// to keep every value integral.
enum class CorpusInvariant : std::uint8_t {
  s_sharp,
  s,
  g4,
  sl_max,
  s_tilde_times_two,
};

std::string_view invariant_name(CorpusInvariant invariant);
std::optional<CorpusInvariant> invariant_from_name(std::string_view name);

// One externally asserted invariant value for a knot, identified by a
// free-form id and carried by a parseable representative.
struct CorpusRecord {
  std::string id;
  RepresentativeKind kind = RepresentativeKind::braid;
  std::optional<int> strands;  // braids only; disallowed for fronts
  std::string word;            // braid or front text format
  CorpusInvariant invariant = CorpusInvariant::s_sharp;
  long long value = 0;
  int row = 0;  // 1-based source row; 0 for generated records

  bool operator==(const CorpusRecord& other) const {
    return id == other.id && kind == other.kind && strands == other.strands &&
           word == other.word && invariant == other.invariant &&
           value == other.value;
  }
};

// CSV schema (header required, exactly 6 comma-separated fields per row):
//   id,kind,strands,word,invariant,value
// kind is braid|front; strands is blank for fronts; no quoting — the word
// field may contain spaces because the column count is fixed. Duplicate
// (id, invariant) rows merge when the values agree and error otherwise.
std::vector<CorpusRecord> parse_corpus_csv(std::string_view text,
                                           std::string_view source_name);
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);
std::string render_corpus_csv(const std::vector<CorpusRecord>& records);

enum class Verdict : std::uint8_t { consistent, violated };

// One inequality instance checked against the corpus: the computed
// self-linking data of a record's representative versus its asserted value.
struct VerificationFinding {
  std::string record_id;
  std::string inequality;  // a Rule name from the bounds module
  std::string relation;    // the relation being checked, e.g. "sl <= s_sharp"
  std::string observed;    // instantiated values
  Verdict verdict = Verdict::consistent;

  bool operator==(const VerificationFinding&) const = default;
};

// Checks every applicable inequality for every record (knot representatives
// only; link representatives yield no findings) plus the s# vs 2s~
// comparison for ids asserting both. Deterministic order: records in input
// order, then cross-record comparisons in first-appearance order of the id.
std::vector<VerificationFinding> verify_corpus(
    const std::vector<CorpusRecord>& records);

// Records for every coprime pair 2 <= p < q <= max_q from the torus closed
// forms: s_sharp, s, g4, sl_max per pair, braid representatives, id t_<p>_<q>.
std::vector<CorpusRecord> torus_corpus(int max_q);

}  // namespace bennequin
