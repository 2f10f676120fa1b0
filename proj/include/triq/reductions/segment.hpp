#pragma once

#include <bit>
#include <string>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/types.hpp"

namespace triq {

// base(level, index) = [index * 2^level, (index + 1) * 2^level - 1], 0-based.
struct BaseInterval {
  unsigned level = 0;
  Index index = 0;

  [[nodiscard]] Index lo() const noexcept { return index << level; }
  [[nodiscard]] Index hi() const noexcept { return ((index + 1) << level) - 1; }
  // Heap numbering of the segment tree over n_pad leaves, 0-based.
  [[nodiscard]] Index id(Index n_pad) const noexcept { return (n_pad >> level) + index - 1; }

  auto operator<=>(const BaseInterval&) const = default;
};

[[nodiscard]] inline Index padded_size(Index n) { return std::bit_ceil(std::max<Index>(n, 1)); }

struct BaseDecomposition {
  std::vector<BaseInterval> parts;  // left to right
  // Largest number of partially covered nodes seen on one tree level.
  Index max_partial_per_level = 0;
};

// Canonical segment-tree split of [lo, hi] (0-based, inclusive) over n_pad
// leaves, n_pad a power of two.
[[nodiscard]] inline BaseDecomposition base_decompose_traced(Index lo, Index hi, Index n_pad) {
  if (!std::has_single_bit(n_pad)) throw RangeError("padded size " + std::to_string(n_pad) + " is not a power of two");
  if (lo > hi || hi >= n_pad) {
    throw RangeError("interval [" + std::to_string(lo) + "," + std::to_string(hi) + "] is not within [0," +
                     std::to_string(n_pad - 1) + "]");
  }
  const auto top = static_cast<unsigned>(std::countr_zero(n_pad));
  BaseDecomposition out;
  std::vector<Index> partial(top + 1, 0);
  auto descend = [&](auto&& self, unsigned level, Index index) -> void {
    const BaseInterval node{level, index};
    if (node.hi() < lo || node.lo() > hi) return;
    if (lo <= node.lo() && node.hi() <= hi) {
      out.parts.push_back(node);
      return;
    }
    ++partial[level];
    self(self, level - 1, 2 * index);
    self(self, level - 1, 2 * index + 1);
  };
  descend(descend, top, 0);
  for (Index c : partial) out.max_partial_per_level = std::max(out.max_partial_per_level, c);
  return out;
}

[[nodiscard]] inline std::vector<BaseInterval> base_decompose(Index lo, Index hi, Index n_pad) {
  return base_decompose_traced(lo, hi, n_pad).parts;
}

}  // namespace triq
