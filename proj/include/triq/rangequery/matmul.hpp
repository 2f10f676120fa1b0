#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/error.hpp"
#include "triq/core/types.hpp"

namespace triq {

enum class MatmulAlgo { kNaive, kStrassen };

namespace detail {

inline void check_product_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

inline DenseMatrix naive_product(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Value x = a(i, k);
      if (x == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

// Square s x s block stored contiguously.
using Block = std::vector<Value>;

inline Block add(const Block& x, const Block& y) {
  Block z(x.size());
  for (Index i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}
inline Block sub(const Block& x, const Block& y) {
  Block z(x.size());
  for (Index i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

inline Block quadrant(const Block& m, Index s, Index qr, Index qc) {
  const Index h = s / 2;
  Block out(h * h);
  for (Index r = 0; r < h; ++r)
    std::copy_n(m.begin() + static_cast<std::ptrdiff_t>((qr * h + r) * s + qc * h), h,
                out.begin() + static_cast<std::ptrdiff_t>(r * h));
  return out;
}

inline Block strassen(const Block& x, const Block& y, Index s, Index leaf) {
  if (s <= leaf) {
    Block z(s * s, 0);
    for (Index i = 0; i < s; ++i)
      for (Index k = 0; k < s; ++k) {
        const Value v = x[i * s + k];
        if (v == 0) continue;
        for (Index j = 0; j < s; ++j) z[i * s + j] += v * y[k * s + j];
      }
    return z;
  }
  const Index h = s / 2;
  const Block a11 = quadrant(x, s, 0, 0), a12 = quadrant(x, s, 0, 1);
  const Block a21 = quadrant(x, s, 1, 0), a22 = quadrant(x, s, 1, 1);
  const Block b11 = quadrant(y, s, 0, 0), b12 = quadrant(y, s, 0, 1);
  const Block b21 = quadrant(y, s, 1, 0), b22 = quadrant(y, s, 1, 1);

  const Block m1 = strassen(add(a11, a22), add(b11, b22), h, leaf);
  const Block m2 = strassen(add(a21, a22), b11, h, leaf);
  const Block m3 = strassen(a11, sub(b12, b22), h, leaf);
  const Block m4 = strassen(a22, sub(b21, b11), h, leaf);
  const Block m5 = strassen(add(a11, a12), b22, h, leaf);
  const Block m6 = strassen(sub(a21, a11), add(b11, b12), h, leaf);
  const Block m7 = strassen(sub(a12, a22), add(b21, b22), h, leaf);

  Block z(s * s);
  for (Index r = 0; r < h; ++r) {
    for (Index c = 0; c < h; ++c) {
      const Index k = r * h + c;
      z[r * s + c] = m1[k] + m4[k] - m5[k] + m7[k];
      z[r * s + c + h] = m3[k] + m5[k];
      z[(r + h) * s + c] = m2[k] + m4[k];
      z[(r + h) * s + c + h] = m1[k] - m2[k] + m3[k] + m6[k];
    }
  }
  return z;
}

}  // namespace detail

// Exact integer product. Strassen pads both operands to a common power-of-two
// square and recurses down to `leaf` before switching to the cubic loop.
[[nodiscard]] inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b,
                                        MatmulAlgo algo = MatmulAlgo::kNaive, Index leaf = 32) {
  detail::check_product_shape(a, b);
  ++counters().matmul_calls;
  if (algo == MatmulAlgo::kNaive) return detail::naive_product(a, b);

  const Index dim = std::max({a.rows(), a.cols(), b.cols(), Index{1}});
  Index s = 1;
  while (s < dim) s *= 2;
  detail::Block x(s * s, 0), y(s * s, 0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) x[i * s + k] = a(i, k);
  for (Index k = 0; k < b.rows(); ++k)
    for (Index j = 0; j < b.cols(); ++j) y[k * s + j] = b(k, j);
  const detail::Block z = detail::strassen(x, y, s, std::max<Index>(leaf, 1));
  DenseMatrix c(a.rows(), b.cols());
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j) c(i, j) = z[i * s + j];
  return c;
}

}  // namespace triq
