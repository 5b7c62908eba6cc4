#pragma once

#include <vector>

namespace bennequin {

// A permutation of {1, ..., n}, stored as an image list: images()[i-1] is the
// image of i. Used for braid closure bookkeeping.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int image_of(int i) const;  // 1-based
  const std::vector<int>& images() const noexcept { return images_; }

  int cycle_count() const;
  // Cycles in canonical order: each starts at its smallest element, cycles
  // sorted by that element.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace bennequin
