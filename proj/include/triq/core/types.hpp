#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triq/core/error.hpp"

namespace triq {

using Value = std::int64_t;
using Index = std::size_t;

// Default bound on |A[i]|. Any fixed polynomial in n keeps the equivalences
// intact; small arrays get a floor so hand-written inputs are not rejected.
[[nodiscard]] inline Value default_value_cap(Index n) {
  const Value base = static_cast<Value>(std::max<Index>(n, 16));
  return base * base * base;
}

// The array A[1..n]. Element access is 0-based; ranges over it are 1-based.
class IntArray {
 public:
  explicit IntArray(std::vector<Value> values) : values_(std::move(values)) {
    if (values_.empty()) throw InputError("array must contain at least one element");
  }

  // Rejects values whose magnitude exceeds `cap`.
  [[nodiscard]] static IntArray checked(std::vector<Value> values,
                                        std::optional<Value> cap = std::nullopt) {
    IntArray a(std::move(values));
    const Value limit = cap.value_or(default_value_cap(a.size()));
    for (Index i = 0; i < a.size(); ++i) {
      const Value v = a[i];
      if (v > limit || v < -limit) {
        throw InputError("value " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                         " exceeds magnitude cap " + std::to_string(limit));
      }
    }
    return a;
  }

  [[nodiscard]] Index size() const noexcept { return values_.size(); }
  [[nodiscard]] Value operator[](Index i) const noexcept { return values_[i]; }
  [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }

  bool operator==(const IntArray&) const = default;

 private:
  std::vector<Value> values_;
};

// Inclusive 1-based range [l, r].
struct Range {
  Index l = 1;
  Index r = 1;

  [[nodiscard]] Index length() const noexcept { return r - l + 1; }
  [[nodiscard]] bool contains(Index i) const noexcept { return l <= i && i <= r; }

  void validate(Index n) const {
    if (l < 1 || l > r || r > n) {
      throw RangeError("range [" + std::to_string(l) + "," + std::to_string(r) +
                       "] is not within [1," + std::to_string(n) + "]");
    }
  }

  auto operator<=>(const Range&) const = default;
};

// Two nonoverlapping ranges, first entirely to the left of second.
struct RangePair {
  Range first;
  Range second;

  void validate(Index n) const {
    first.validate(n);
    second.validate(n);
    if (first.r >= second.l) {
      throw InputError("range pair ([" + std::to_string(first.l) + "," + std::to_string(first.r) +
                       "],[" + std::to_string(second.l) + "," + std::to_string(second.r) +
                       "]) overlaps or is out of order");
    }
  }

  auto operator<=>(const RangePair&) const = default;
};

template <typename Query>
void validate_all(std::span<const Query> queries, Index n) {
  for (const Query& q : queries) q.validate(n);
}

// Row-major integer matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Index rows, Index cols, Value fill = 0)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  DenseMatrix(Index rows, Index cols, std::vector<Value> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ShapeError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  [[nodiscard]] static DenseMatrix from_rows(const std::vector<std::vector<Value>>& rows) {
    const Index r = rows.size();
    const Index c = r == 0 ? 0 : rows.front().size();
    std::vector<Value> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged matrix rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return {r, c, std::move(flat)};
  }

  [[nodiscard]] static DenseMatrix identity(Index n) {
    DenseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] Index rows() const noexcept { return rows_; }
  [[nodiscard]] Index cols() const noexcept { return cols_; }
  [[nodiscard]] Value& operator()(Index r, Index c) noexcept { return entries_[r * cols_ + c]; }
  [[nodiscard]] Value operator()(Index r, Index c) const noexcept { return entries_[r * cols_ + c]; }
  [[nodiscard]] std::span<const Value> entries() const noexcept { return entries_; }

  [[nodiscard]] DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
      for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Value> entries_;
};

using Vertex = std::uint32_t;

// Three distinct vertices in increasing order.
struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  [[nodiscard]] static Triangle of(Vertex x, Vertex y, Vertex z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
  }

  auto operator<=>(const Triangle&) const = default;
};

}  // namespace triq
