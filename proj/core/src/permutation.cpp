#include "bennequin/permutation.hpp"

#include <numeric>
#include <string>

#include "bennequin/errors.hpp"

namespace bennequin {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw domain_error("permutation images must be a bijection on {1.." +
                         std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw domain_error("permutation size must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::image_of(int i) const {
  if (i < 1 || i > size()) {
    throw domain_error("permutation argument " + std::to_string(i) +
                       " out of range 1.." + std::to_string(size()));
  }
  return images_[static_cast<std::size_t>(i - 1)];
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> visited(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    ++count;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)];
         i = images_[static_cast<std::size_t>(i - 1)]) {
      visited[static_cast<std::size_t>(i - 1)] = 1;
    }
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> visited(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)];
         i = images_[static_cast<std::size_t>(i - 1)]) {
      visited[static_cast<std::size_t>(i - 1)] = 1;
      cycle.push_back(i);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

}  // namespace bennequin
