#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/normalize.hpp"
#include "triq/rangequery/matmul.hpp"
#include "triq/rangequery/mo_online.hpp"

namespace triq {

struct OnlineEqOptions {
  Index q_hint = 1;
  // Effective matrix-multiplication exponent. Only steers block sizes.
  double omega = 2.807;
  MatmulAlgo algo = MatmulAlgo::kStrassen;
  // Overrides for tests; when unset they follow from q_hint and omega.
  std::optional<Index> block_count;
  std::optional<Index> frequency_threshold;
};

// Online RangeEqPairsQuery via block-pair counts.
//
// The array is cut into b_cnt blocks of b_len elements. B[i][j] counts
// ordered pairs (x, y), x in block i, y in block j, A[x] == A[y], including
// x == y, so B is symmetric and a square region of it counts every unordered
// equal pair twice plus each position once. Frequent values (at least
// `threshold` occurrences) contribute M * M^T, where M[i][v] is the count of
// frequent value v in block i; rare values contribute by enumerating their
// occurrence pairs. S is the 2D prefix sum of B.
class OnlineEqStructure {
 public:
  [[nodiscard]] static OnlineEqStructure build(const IntArray& a, const OnlineEqOptions& opt = {}) {
    if (opt.q_hint < 1) throw InputError("q_hint must be at least 1");
    if (!(opt.omega >= 2.0 && opt.omega <= 3.0)) throw InputError("omega must lie in [2, 3]");
    return OnlineEqStructure(a, opt);
  }

  [[nodiscard]] Value query(const Range& q) const {
    q.validate(n_);
    const Index l = q.l - 1;
    const Index r = q.r - 1;
    const Index first_full = (l + block_len_ - 1) / block_len_;
    const Index end_full = (r + 1) / block_len_;  // one past the last full block

    auto count_in = [&](Value v, Index lo, Index hi) -> Value {  // inclusive, lo <= hi + 1
      const auto& pos = positions_[v];
      return std::upper_bound(pos.begin(), pos.end(), hi) - std::lower_bound(pos.begin(), pos.end(), lo);
    };

    if (first_full >= end_full) {
      Value total = 0;
      for (Index x = l; x < r; ++x) total += count_in(ranks_[x], x + 1, r);
      return total;
    }
    const Index mid_lo = first_full * block_len_;
    const Index mid_hi = end_full * block_len_ - 1;
    const Value square = prefix_(end_full, end_full) - prefix_(first_full, end_full) -
                         prefix_(end_full, first_full) + prefix_(first_full, first_full);
    Value total = (square - static_cast<Value>(mid_hi - mid_lo + 1)) / 2;
    for (Index x = l; x < mid_lo; ++x) total += count_in(ranks_[x], x + 1, r);
    for (Index y = mid_hi + 1; y <= r; ++y) total += count_in(ranks_[y], mid_lo, y - 1);
    return total;
  }

  [[nodiscard]] Index block_len() const noexcept { return block_len_; }
  [[nodiscard]] Index block_count() const noexcept { return block_count_; }
  [[nodiscard]] Index threshold() const noexcept { return threshold_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] double omega() const noexcept { return omega_; }
  [[nodiscard]] Index frequent_values() const noexcept { return frequent_values_; }
  [[nodiscard]] const DenseMatrix& frequent_counts() const noexcept { return b_frequent_; }
  [[nodiscard]] const DenseMatrix& rare_counts() const noexcept { return b_rare_; }
  [[nodiscard]] const DenseMatrix& block_counts() const noexcept { return b_; }
  [[nodiscard]] const DenseMatrix& prefix() const noexcept { return prefix_; }

  // Exponents for q = n^alpha queries, from balancing preprocessing against
  // query time with the naive rectangular bound. Both clamped to [0, 1].
  static std::pair<double, double> exponents(Index n, Index q, double omega) {
    const double alpha = n <= 1 ? 1.0 : std::log(static_cast<double>(q)) / std::log(static_cast<double>(n));
    const double beta = q <= n ? 2.0 * alpha / (omega + 1.0)
                               : (3.0 - omega + alpha * (omega - 1.0)) / (omega + 1.0);
    const double b = std::clamp(beta, 0.0, 1.0);
    const double g = std::clamp(1.0 + b - alpha, 0.0, 1.0);
    return {b, g};
  }

 private:
  OnlineEqStructure(const IntArray& a, const OnlineEqOptions& opt)
      : n_(a.size()), ranks_(normalize(a)), omega_(opt.omega) {
    std::tie(beta_, gamma_) = exponents(n_, opt.q_hint, opt.omega);
    const double nd = static_cast<double>(n_);
    Index blocks = opt.block_count.value_or(static_cast<Index>(std::llround(std::pow(nd, beta_))));
    blocks = std::clamp<Index>(blocks, 1, n_);
    block_len_ = (n_ + blocks - 1) / blocks;
    block_count_ = (n_ + block_len_ - 1) / block_len_;
    threshold_ = std::max<Index>(
        1, opt.frequency_threshold.value_or(static_cast<Index>(std::ceil(std::pow(nd, 1.0 - gamma_)))));

    const Index domain = distinct_count(a);
    positions_.assign(domain, {});
    for (Index i = 0; i < n_; ++i) positions_[ranks_[i]].push_back(i);

    std::vector<Index> frequent;
    for (Index v = 0; v < domain; ++v)
      if (positions_[v].size() >= threshold_) frequent.push_back(v);
    frequent_values_ = frequent.size();

    DenseMatrix m(block_count_, frequent.size());
    for (Index c = 0; c < frequent.size(); ++c)
      for (Index pos : positions_[frequent[c]]) ++m(pos / block_len_, c);
    b_frequent_ = matmul(m, m.transposed(), opt.algo);

    b_rare_ = DenseMatrix(block_count_, block_count_);
    for (Index v = 0; v < domain; ++v) {
      if (positions_[v].size() >= threshold_) continue;
      for (Index x : positions_[v])
        for (Index y : positions_[v]) ++b_rare_(x / block_len_, y / block_len_);
    }

    b_ = DenseMatrix(block_count_, block_count_);
    prefix_ = DenseMatrix(block_count_ + 1, block_count_ + 1);
    for (Index i = 0; i < block_count_; ++i) {
      for (Index j = 0; j < block_count_; ++j) {
        b_(i, j) = b_frequent_(i, j) + b_rare_(i, j);
        prefix_(i + 1, j + 1) = prefix_(i + 1, j) + prefix_(i, j + 1) - prefix_(i, j) + b_(i, j);
      }
    }
  }

  Index n_;
  IntArray ranks_;
  double omega_;
  double beta_ = 0;
  double gamma_ = 0;
  Index block_len_ = 1;
  Index block_count_ = 1;
  Index threshold_ = 1;
  Index frequent_values_ = 0;
  std::vector<std::vector<Index>> positions_;
  DenseMatrix b_frequent_;
  DenseMatrix b_rare_;
  DenseMatrix b_;
  DenseMatrix prefix_;
};

// The online structure with the query-count guess doubling on demand.
class OnlineEq : public Adaptive<OnlineEqStructure> {
 public:
  explicit OnlineEq(const IntArray& a, OnlineEqOptions opt = {}, Index initial_guess = 1)
      : Adaptive<OnlineEqStructure>(
            [a, opt](Index q) {
              OnlineEqOptions o = opt;
              o.q_hint = q;
              return OnlineEqStructure::build(a, o);
            },
            initial_guess) {}
};

[[nodiscard]] inline std::vector<Value> online_eq_batch(const IntArray& a, std::span<const Range> queries,
                                                        const OnlineEqOptions& opt = {}) {
  validate_all(queries, a.size());
  OnlineEq online(a, opt);
  std::vector<Value> out;
  out.reserve(queries.size());
  for (const Range& q : queries) out.push_back(online.query(q));
  return out;
}

}  // namespace triq
