#pragma once

#include <algorithm>
#include <vector>

#include "triq/core/types.hpp"

namespace triq {

// Replaces every value by its 0-based rank among the distinct values.
[[nodiscard]] inline IntArray normalize(const IntArray& a) {
  std::vector<Value> distinct(a.values().begin(), a.values().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Value> ranks(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    ranks[i] = std::lower_bound(distinct.begin(), distinct.end(), a[i]) - distinct.begin();
  }
  return IntArray(std::move(ranks));
}

// Number of distinct values, i.e. one past the largest normalized value.
[[nodiscard]] inline Index distinct_count(const IntArray& a) {
  std::vector<Value> v(a.values().begin(), a.values().end());
  std::sort(v.begin(), v.end());
  return static_cast<Index>(std::unique(v.begin(), v.end()) - v.begin());
}

// ceil(log2(n)) with the convention that one bit is used for n <= 2.
[[nodiscard]] inline unsigned bits_for(Index n) {
  unsigned k = 1;
  while ((Index{1} << k) < n) ++k;
  return k;
}

}  // namespace triq
