#include "bennequin/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "bennequin/errors.hpp"

namespace bennequin {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Whitespace-separated tokens with their 1-based ordinals.
std::vector<std::pair<int, std::string_view>> tokenize(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> tokens;
  std::size_t i = 0;
  int ordinal = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    tokens.emplace_back(++ordinal, text.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void fail_token(int ordinal, std::string_view token,
                             const std::string& reason) {
  throw parse_error("braid word token " + std::to_string(ordinal) + " ('" +
                    std::string(token) + "'): " + reason);
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw domain_error("braid needs at least 1 strand, got " +
                       std::to_string(strands_));
  }
  for (int letter : letters_) {
    if (letter == 0) throw domain_error("braid letter 0 is not a generator");
    int index = std::abs(letter);
    if (index > strands_ - 1) {
      throw domain_error("braid letter " + std::to_string(letter) +
                         " out of range for " + std::to_string(strands_) +
                         " strands (|letter| <= " +
                         std::to_string(strands_ - 1) + ")");
    }
  }
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands,
                           std::size_t max_letters) {
  if (strands && *strands < 1) {
    throw parse_error("strand count must be at least 1, got " +
                      std::to_string(*strands));
  }
  auto tokens = tokenize(text);
  if (tokens.size() > max_letters) {
    throw parse_error("braid word has " + std::to_string(tokens.size()) +
                      " letters; limit is " + std::to_string(max_letters));
  }
  std::vector<int> letters;
  letters.reserve(tokens.size());
  int max_index = 0;
  for (auto [ordinal, token] : tokens) {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
      fail_token(ordinal, token, "letter magnitude out of range");
    }
    if (ec != std::errc() || end != digits.data() + digits.size()) {
      fail_token(ordinal, token, "expected a nonzero signed integer");
    }
    if (value == 0) fail_token(ordinal, token, "letter 0 is not a generator");
    int index = std::abs(value);
    if (strands && index > *strands - 1) {
      fail_token(ordinal, token,
                 "|letter| must be at most strands - 1 = " +
                     std::to_string(*strands - 1));
    }
    max_index = std::max(max_index, index);
    letters.push_back(value);
  }
  int n = strands ? *strands : (letters.empty() ? 1 : max_index + 1);
  return BraidWord(n, std::move(letters));
}

CrossingCounts crossing_counts(const BraidWord& word) noexcept {
  CrossingCounts counts;
  for (int letter : word.letters()) {
    (letter > 0 ? counts.positive : counts.negative) += 1;
  }
  return counts;
}

Permutation closure_permutation(const BraidWord& word) {
  std::vector<int> images(static_cast<std::size_t>(word.strands()));
  for (int i = 0; i < word.strands(); ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int letter : word.letters()) {
    std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    std::swap(images[i], images[i + 1]);
  }
  return Permutation(std::move(images));
}

int component_count(const BraidWord& word) {
  return closure_permutation(word).cycle_count();
}

bool is_knot_closure(const BraidWord& word) {
  return component_count(word) == 1;
}

long long self_linking(const BraidWord& word) noexcept {
  auto counts = crossing_counts(word);
  return counts.positive - counts.negative - word.strands();
}

BraidWord torus_braid(int p, int q, std::size_t max_letters) {
  if (p < 1 || q < 1) {
    throw domain_error("torus braid parameters must be positive, got p=" +
                       std::to_string(p) + " q=" + std::to_string(q));
  }
  unsigned long long total = static_cast<unsigned long long>(p - 1) *
                             static_cast<unsigned long long>(q);
  if (total > max_letters) {
    throw domain_error("torus braid (" + std::to_string(p) + "," +
                       std::to_string(q) + ") needs " + std::to_string(total) +
                       " letters; limit is " + std::to_string(max_letters));
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(total));
  for (int rep = 0; rep < q; ++rep) {
    for (int k = 1; k <= p - 1; ++k) letters.push_back(k);
  }
  return BraidWord(p, std::move(letters));
}

PositiveResolution positive_resolution(const BraidWord& word) {
  std::vector<int> letters = word.letters();
  long long switches = 0;
  for (int& letter : letters) {
    if (letter < 0) {
      letter = -letter;
      ++switches;
    }
  }
  return {BraidWord(word.strands(), std::move(letters)), switches};
}

BraidWord crossing_change(const BraidWord& word, std::size_t index) {
  if (index < 1 || index > word.length()) {
    throw domain_error("crossing index " + std::to_string(index) +
                       " out of range 1.." + std::to_string(word.length()));
  }
  std::vector<int> letters = word.letters();
  letters[index - 1] = -letters[index - 1];
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& word, int generator) {
  if (generator < 1 || generator > word.strands() - 1) {
    throw domain_error("generator index " + std::to_string(generator) +
                       " out of range 1.." +
                       std::to_string(word.strands() - 1));
  }
  std::vector<int> letters;
  letters.reserve(word.length() + 2);
  letters.push_back(-generator);
  letters.insert(letters.end(), word.letters().begin(), word.letters().end());
  letters.push_back(generator);
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& word, int sign) {
  if (sign != 1 && sign != -1) {
    throw domain_error("stabilization sign must be +1 or -1, got " +
                       std::to_string(sign));
  }
  std::vector<int> letters = word.letters();
  letters.push_back(sign * word.strands());
  return BraidWord(word.strands() + 1, std::move(letters));
}

BraidWord mirror(const BraidWord& word) {
  std::vector<int> letters = word.letters();
  for (int& letter : letters) letter = -letter;
  return BraidWord(word.strands(), std::move(letters));
}

std::string render(const BraidWord& word) {
  std::string text;
  for (std::size_t i = 0; i < word.length(); ++i) {
    if (i > 0) text += ' ';
    text += std::to_string(word.letters()[i]);
  }
  return text;
}

}  // namespace bennequin
