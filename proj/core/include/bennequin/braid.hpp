#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bennequin/permutation.hpp"

namespace bennequin {

// Words longer than this are rejected at parse time unless the caller raises
// the limit explicitly.
inline constexpr std::size_t kDefaultMaxWordLength = 1'000'000;

// A word in the Artin generators of the braid group on `strands` strands.
// Letter +k stands for the positive generator sigma_k (strand k crosses over
// strand k+1), -k for its inverse; 1 <= |k| <= strands - 1.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  // Parses whitespace-separated signed integers. With no explicit strand
  // count, uses the smallest group containing the word (max |letter| + 1,
  // or 1 for the empty word).
  static BraidWord parse(std::string_view text,
                         std::optional<int> strands = std::nullopt,
                         std::size_t max_letters = kDefaultMaxWordLength);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

struct CrossingCounts {
  long long positive = 0;  // x+
  long long negative = 0;  // x-
};

CrossingCounts crossing_counts(const BraidWord& word) noexcept;

// Permutation induced on strand positions by the closure: image_of(p) is the
// strand (by its top label) arriving at bottom position p.
Permutation closure_permutation(const BraidWord& word);

int component_count(const BraidWord& word);
bool is_knot_closure(const BraidWord& word);

// Self-linking number of the transverse closure: x+ - x- - strands.
long long self_linking(const BraidWord& word) noexcept;

// (sigma_1 ... sigma_{p-1})^q on p strands; closure is the (p,q) torus link.
BraidWord torus_braid(int p, int q,
                      std::size_t max_letters = kDefaultMaxWordLength);

struct PositiveResolution {
  BraidWord word;        // every letter made positive
  long long switches;    // number of letters flipped (= x- of the input)
};

PositiveResolution positive_resolution(const BraidWord& word);

// Flips the sign of the letter at 1-based `index`.
BraidWord crossing_change(const BraidWord& word, std::size_t index);

// sigma_k^{-1} . word . sigma_k (Markov conjugation; closure unchanged).
BraidWord conjugate(const BraidWord& word, int generator);

// Markov stabilization: appends sigma_n^{+-1} on strands + 1 strands.
BraidWord stabilize(const BraidWord& word, int sign);

BraidWord mirror(const BraidWord& word);

// Canonical text form: letters separated by single spaces, no sign on
// positives. parse(render(w), w.strands()) == w.
std::string render(const BraidWord& word);

}  // namespace bennequin
