#pragma once

// Reductions among the single-range and two-range pair-query problems.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/normalize.hpp"
#include "triq/core/pair_function.hpp"
#include "triq/core/solver_types.hpp"
#include "triq/reductions/decomposition.hpp"

namespace triq {

// f([a,b],[c,d]) = f([a,d]) - f([a,c-1]) - f([b+1,d]) + f([b+1,c-1]).
// The last range is empty when the pair is adjacent; it contributes 0 and is
// not sent to the solver.
[[nodiscard]] inline PairSolver reduce_2r_to_1r(RangeSolver single) {
  return [single = std::move(single)](const IntArray& a, std::span<const RangePair> pairs) {
    validate_all(pairs, a.size());
    std::vector<Range> ranges;
    ranges.reserve(4 * pairs.size());
    for (const RangePair& p : pairs) {
      ranges.push_back({p.first.l, p.second.r});
      ranges.push_back({p.first.l, p.second.l - 1});
      ranges.push_back({p.first.r + 1, p.second.r});
      if (p.first.r + 1 <= p.second.l - 1) ranges.push_back({p.first.r + 1, p.second.l - 1});
    }
    const std::vector<Value> ans = single(a, ranges);
    std::vector<Value> out;
    out.reserve(pairs.size());
    Index k = 0;
    for (const RangePair& p : pairs) {
      Value v = ans[k] - ans[k + 1] - ans[k + 2];
      k += 3;
      if (p.first.r + 1 <= p.second.l - 1) v += ans[k++];
      out.push_back(v);
    }
    return out;
  };
}

namespace detail {

// P[x] = f([1, x]) for x = 0..n, from one left-to-right pass.
inline std::vector<Value> prefix_answers(const PairFunction& f, const IntArray& a) {
  const Index n = a.size();
  std::vector<Value> prefix(n + 1, 0);
  if (f.kind() == PairKind::kMul) {
    Value sum = 0;
    for (Index x = 0; x < n; ++x) {
      prefix[x + 1] = prefix[x] + sum * a[x];
      sum += a[x];
    }
    return prefix;
  }
  const Index domain = distinct_count(a);
  const auto d = f.decomposition(domain);
  if (!d) throw CapabilityError("pair function '" + f.name() + "' has no decomposition");
  const IntArray input = d->on_ranks ? normalize(a) : a;
  std::vector<std::unordered_map<Value, Value>> seen(d->terms.size());
  for (Index x = 0; x < n; ++x) {
    Value gain = 0;
    for (Index t = 0; t < d->terms.size(); ++t) {
      const Value key = d->terms[t].right(input[x]);
      if (auto it = seen[t].find(key); it != seen[t].end()) gain += d->terms[t].coefficient * it->second;
    }
    prefix[x + 1] = prefix[x] + gain;
    for (Index t = 0; t < d->terms.size(); ++t) {
      const Value key = d->terms[t].left(input[x]);
      if (key != kNeverLeft) ++seen[t][key];
    }
  }
  return prefix;
}

}  // namespace detail

// f([a,b]) = P[b] - P[a-1] - f([1,a-1],[a,b]), with P from a prefix pass.
// mul uses running sums; every other f needs a decomposition.
[[nodiscard]] inline RangeSolver reduce_1r_to_2r(PairFunction f, PairSolver pair) {
  if (f.kind() == PairKind::kCustom && !f.decomposition(1)) {
    throw CapabilityError("pair function '" + f.name() + "' has no decomposition");
  }
  return [f = std::move(f), pair = std::move(pair)](const IntArray& a, std::span<const Range> ranges) {
    validate_all(ranges, a.size());
    const std::vector<Value> prefix = detail::prefix_answers(f, a);
    std::vector<RangePair> pairs;
    for (const Range& r : ranges)
      if (r.l > 1) pairs.push_back({{1, r.l - 1}, r});
    const std::vector<Value> cross = pair(a, pairs);
    std::vector<Value> out;
    out.reserve(ranges.size());
    Index k = 0;
    for (const Range& r : ranges) {
      Value v = prefix[r.r] - prefix[r.l - 1];
      if (r.l > 1) v -= cross[k++];
      out.push_back(v);
    }
    return out;
  };
}

// eqp(X, Y) = |X||Y| - inv_A(X, Y) - inv_{-A}(X, Y).
[[nodiscard]] inline PairSolver reduce_eqp_to_inv(PairSolver inv) {
  return [inv = std::move(inv)](const IntArray& a, std::span<const RangePair> pairs) {
    validate_all(pairs, a.size());
    std::vector<Value> negated(a.values().begin(), a.values().end());
    for (Value& v : negated) v = -v;
    const std::vector<Value> fwd = inv(a, pairs);
    const std::vector<Value> bwd = inv(IntArray(std::move(negated)), pairs);
    std::vector<Value> out(pairs.size());
    for (Index i = 0; i < pairs.size(); ++i) {
      const auto size = static_cast<Value>(pairs[i].first.length() * pairs[i].second.length());
      out[i] = size - fwd[i] - bwd[i];
    }
    return out;
  };
}

// The k = bits_for(n) arrays of length 2n behind inv -> eqp. For bit t, the
// first half holds the (t-1)-bit prefix of every normalized value whose bit t
// is 1 (else -1); the second half holds the prefix of every value whose bit t
// is 0 (else 2n). Equal entries across halves mark exactly the pairs whose
// most significant differing bit is t with the larger value first.
[[nodiscard]] inline std::vector<IntArray> bit_arrays(const IntArray& a) {
  const Index n = a.size();
  const IntArray ranks = normalize(a);
  const Decomposition d = inv_decomposition(bits_for(n));
  std::vector<IntArray> out;
  out.reserve(d.terms.size());
  for (const DecompositionTerm& term : d.terms) {
    std::vector<Value> v(2 * n);
    for (Index j = 0; j < n; ++j) {
      const Value left = term.left(ranks[j]);
      const Value right = term.right(ranks[j]);
      v[j] = left == kNeverLeft ? -1 : left;
      v[n + j] = right == kNeverRight ? static_cast<Value>(2 * n) : right;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

// Shifts a pair on A onto the doubled array: second range moves to n + [c, d].
[[nodiscard]] inline std::vector<RangePair> doubled_queries(Index n, std::span<const RangePair> pairs) {
  std::vector<RangePair> out;
  out.reserve(pairs.size());
  for (const RangePair& p : pairs) out.push_back({p.first, {n + p.second.l, n + p.second.r}});
  return out;
}

// inv(X, Y) = sum over bit arrays A_t of eqp_{A_t}(X, n + Y).
[[nodiscard]] inline PairSolver reduce_inv_to_eqp(PairSolver eqp) {
  return [eqp = std::move(eqp)](const IntArray& a, std::span<const RangePair> pairs) {
    validate_all(pairs, a.size());
    const std::vector<RangePair> shifted = doubled_queries(a.size(), pairs);
    std::vector<Value> out(pairs.size(), 0);
    for (const IntArray& arr : bit_arrays(a)) {
      const std::vector<Value> part = eqp(arr, shifted);
      for (Index i = 0; i < out.size(); ++i) out[i] += part[i];
    }
    return out;
  };
}

// Runs eqp once per decomposition term on A_i = g_i(A) ++ h_i(A) and sums
// the weighted answers. Never-equal markers become one below / one above the
// term's image range.
[[nodiscard]] inline PairSolver apply_decomposition(Decomposition d, PairSolver eqp) {
  return [d = std::move(d), eqp = std::move(eqp)](const IntArray& a, std::span<const RangePair> pairs) {
    validate_all(pairs, a.size());
    const Index n = a.size();
    const IntArray input = d.on_ranks ? normalize(a) : a;
    check_encoding(d, input.values());
    const std::vector<RangePair> shifted = doubled_queries(n, pairs);
    std::vector<Value> out(pairs.size(), 0);
    for (const DecompositionTerm& term : d.terms) {
      std::vector<Value> v(2 * n);
      bool any = false;
      Value lo = 0, hi = 0;
      auto see = [&](Value x) {
        if (x == kNeverLeft || x == kNeverRight) return;
        lo = any ? std::min(lo, x) : x;
        hi = any ? std::max(hi, x) : x;
        any = true;
      };
      for (Index j = 0; j < n; ++j) {
        v[j] = term.left(input[j]);
        v[n + j] = term.right(input[j]);
        see(v[j]);
        see(v[n + j]);
      }
      for (Index j = 0; j < n; ++j) {
        if (v[j] == kNeverLeft) v[j] = lo - 1;
        if (v[n + j] == kNeverRight) v[n + j] = hi + 1;
      }
      const std::vector<Value> part = eqp(IntArray(std::move(v)), shifted);
      for (Index i = 0; i < out.size(); ++i) out[i] += term.coefficient * part[i];
    }
    return out;
  };
}

// True iff d reproduces f on every (x, y) in [0, domain)^2.
[[nodiscard]] inline bool check_decomposition(const PairFunction& f, const Decomposition& d, Index domain) {
  for (Index x = 0; x < domain; ++x)
    for (Index y = 0; y < domain; ++y)
      if (d.evaluate(static_cast<Value>(x), static_cast<Value>(y)) != f(static_cast<Value>(x), static_cast<Value>(y)))
        return false;
  return true;
}

// mul(X, Y) = (sum over X) * (sum over Y).
[[nodiscard]] inline std::vector<Value> mul_pairs_fast(const IntArray& a, std::span<const RangePair> pairs) {
  validate_all(pairs, a.size());
  std::vector<Value> prefix(a.size() + 1, 0);
  for (Index i = 0; i < a.size(); ++i) prefix[i + 1] = prefix[i] + a[i];
  std::vector<Value> out;
  out.reserve(pairs.size());
  for (const RangePair& p : pairs) {
    out.push_back((prefix[p.first.r] - prefix[p.first.l - 1]) * (prefix[p.second.r] - prefix[p.second.l - 1]));
  }
  return out;
}

// Boolean product of d x d matrices through one 2req batch. Row i of x
// contributes the segment {k : x[i][k] = 1}, column j of y the segment
// {k : y[k][j] = 1}; (xy)[i][j] = 1 iff the two segments share a value.
[[nodiscard]] inline DenseMatrix bmm_via_2req(const DenseMatrix& x, const DenseMatrix& y, const PairSolver& eqp) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw ShapeError("boolean product needs two square matrices of equal dimension");
  }
  for (const DenseMatrix* m : {&x, &y})
    for (Value v : m->entries())
      if (v != 0 && v != 1) throw InputError("boolean product needs 0/1 entries, got " + std::to_string(v));

  const Index d = x.rows();
  std::vector<Value> values;
  std::vector<Range> rows(d), cols(d);
  std::vector<bool> row_empty(d), col_empty(d);
  auto segment = [&](auto&& entry, Range& out, std::vector<bool>::reference empty) {
    const Index begin = values.size();
    for (Index k = 0; k < d; ++k)
      if (entry(k) == 1) values.push_back(static_cast<Value>(k));
    empty = values.size() == begin;
    out = {begin + 1, std::max(begin + 1, values.size())};
  };
  for (Index i = 0; i < d; ++i) segment([&](Index k) { return x(i, k); }, rows[i], row_empty[i]);
  for (Index j = 0; j < d; ++j) segment([&](Index k) { return y(k, j); }, cols[j], col_empty[j]);

  DenseMatrix out(d, d);
  std::vector<RangePair> queries;
  std::vector<std::pair<Index, Index>> cells;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (!row_empty[i] && !col_empty[j]) {
        queries.push_back({rows[i], cols[j]});
        cells.emplace_back(i, j);
      }
  if (queries.empty()) return out;
  const std::vector<Value> ans = eqp(IntArray(std::move(values)), queries);
  for (Index k = 0; k < cells.size(); ++k) out(cells[k].first, cells[k].second) = ans[k] > 0 ? 1 : 0;
  return out;
}

}  // namespace triq
