// Deterministic enumeration primitives: set partitions and k-combinations.
#pragma once

#include <span>
#include <vector>

namespace cyclo {

/// Calls fn(blocks) for every set partition of {1..n}, in lexicographic order of
/// restricted growth strings. Blocks are sorted ascending and ordered by their
/// least element. n = 0 yields the single empty partition.
template <class Fn>
void for_each_set_partition(int n, Fn&& fn) {
  std::vector<std::vector<int>> blocks;
  auto place = [&](auto&& self, int element) -> void {
    if (element > n) {
      fn(static_cast<const std::vector<std::vector<int>>&>(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(element);
      self(self, element + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({element});
    self(self, element + 1);
    blocks.pop_back();
  };
  place(place, 1);
}

/// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
/// Restricting the first index to [first_lo, first_hi) partitions the stream
/// into independent ranges.
template <class Fn>
void for_each_combination(int m, int k, Fn&& fn, int first_lo = 0, int first_hi = -1) {
  if (first_hi < 0) first_hi = m;
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  if (k == 0) {
    if (first_lo == 0) fn(std::span<const int>(idx));
    return;
  }
  for (int first = first_lo; first < first_hi && first <= m - k; ++first) {
    idx[0] = first;
    for (int i = 1; i < k; ++i) idx[i] = first + i;
    while (true) {
      fn(std::span<const int>(idx));
      int i = k - 1;
      while (i >= 1 && idx[i] == m - k + i) --i;
      if (i < 1) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace cyclo
