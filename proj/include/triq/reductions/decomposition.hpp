#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/types.hpp"

namespace triq {

// Images reserved for "matches nothing": a left map may send a value to
// kNeverLeft, a right map to kNeverRight. They stand in for -inf / +inf.
inline constexpr Value kNeverLeft = std::numeric_limits<Value>::min();
inline constexpr Value kNeverRight = std::numeric_limits<Value>::max();

using ValueMap = std::function<Value(Value)>;

struct DecompositionTerm {
  Value coefficient = 1;
  ValueMap left;   // applied to the first element of a pair
  ValueMap right;  // applied to the second element
};

// f(x, y) = sum_i coefficient_i * [left_i(x) == right_i(y)].
//
// When on_ranks is set the maps expect rank-normalized inputs in [0, domain);
// otherwise they are applied to the raw array values.
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  bool on_ranks = false;

  [[nodiscard]] Value evaluate(Value x, Value y) const {
    Value s = 0;
    for (const auto& t : terms) {
      const Value gx = t.left(x);
      if (gx != kNeverLeft && gx == t.right(y)) s += t.coefficient;
    }
    return s;
  }
};

[[nodiscard]] inline Decomposition eqp_decomposition() {
  auto id = [](Value x) { return x; };
  return {{{1, id, id}}, false};
}

// Bit decomposition of inv over values in [0, 2^bits): term t fires exactly
// when t is the most significant bit on which x and y differ and x has a 1
// there. Left image is the shared (t-1)-bit prefix.
[[nodiscard]] inline Decomposition inv_decomposition(unsigned bits) {
  Decomposition d;
  d.on_ranks = true;
  for (unsigned t = 1; t <= bits; ++t) {
    const unsigned shift = bits - t;
    d.terms.push_back(
        {1,
         [shift](Value x) { return ((x >> shift) & 1) ? (x >> (shift + 1)) : kNeverLeft; },
         [shift](Value y) { return ((y >> shift) & 1) ? kNeverRight : (y >> (shift + 1)); }});
  }
  return d;
}

// Throws EncodingError if some left map produces kNeverRight or some right
// map produces kNeverLeft on the given inputs.
inline void check_encoding(const Decomposition& d, std::span<const Value> inputs) {
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    for (Value x : inputs) {
      if (d.terms[i].left(x) == kNeverRight || d.terms[i].right(x) == kNeverLeft) {
        throw EncodingError("term " + std::to_string(i) + " maps value " + std::to_string(x) +
                            " onto the opposite side's never-equal marker");
      }
    }
  }
}

}  // namespace triq
