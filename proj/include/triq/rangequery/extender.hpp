#pragma once

#include <memory>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/error.hpp"
#include "triq/core/normalize.hpp"
#include "triq/core/pair_function.hpp"
#include "triq/core/types.hpp"

namespace triq {

// Counts per value with prefix-sum queries.
class FenwickCounter {
 public:
  explicit FenwickCounter(Index domain) : tree_(domain + 1, 0) {}

  void add(Value v, Value delta) {
    for (Index i = static_cast<Index>(v) + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  // Number of stored elements with value < v.
  [[nodiscard]] Value count_less(Value v) const {
    Value s = 0;
    for (Index i = static_cast<Index>(v); i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }
  [[nodiscard]] Value total() const { return count_less(static_cast<Value>(tree_.size() - 1)); }

 private:
  std::vector<Value> tree_;
};

// Maintains f([lo, hi)) over a fixed normalized array while the window moves
// one element at a time. Positions are 0-based, the window half-open.
class Extender {
 public:
  explicit Extender(std::span<const Value> values) : values_(values) {}
  virtual ~Extender() = default;

  Extender(const Extender&) = delete;
  Extender& operator=(const Extender&) = delete;

  // Empties the window and places it at `pos`.
  void reset(Index pos) {
    while (hi_ > lo_) shrink_right();
    lo_ = hi_ = pos;
    answer_ = 0;
  }

  void extend_right() { answer_ += insert(values_[hi_++], /*at_right=*/true); ++counters().extender_steps; }
  void extend_left() { answer_ += insert(values_[--lo_], /*at_right=*/false); ++counters().extender_steps; }
  void shrink_right() { answer_ -= erase(values_[--hi_], /*at_right=*/true); ++counters().extender_steps; }
  void shrink_left() { answer_ -= erase(values_[lo_++], /*at_right=*/false); ++counters().extender_steps; }

  // Moves the window to [lo, hi), growing before shrinking.
  void move_to(Index lo, Index hi) {
    while (lo_ > lo) extend_left();
    while (hi_ < hi) extend_right();
    while (lo_ < lo) shrink_left();
    while (hi_ > hi) shrink_right();
  }

  [[nodiscard]] Value answer() const noexcept { return answer_; }
  [[nodiscard]] Index lo() const noexcept { return lo_; }
  [[nodiscard]] Index hi() const noexcept { return hi_; }

  // Whether the same update rule is available over a persistent multiset,
  // which the online variant needs.
  [[nodiscard]] virtual bool supports_snapshots() const noexcept { return false; }

 protected:
  // Contribution of pairing v with every element currently in the window,
  // v being placed after them (at_right) or before them. Updates the state.
  virtual Value insert(Value v, bool at_right) = 0;
  // Inverse of insert for an element at the given end of the window.
  virtual Value erase(Value v, bool at_right) = 0;

 private:
  std::span<const Value> values_;
  Index lo_ = 0;
  Index hi_ = 0;
  Value answer_ = 0;
};

class InvExtender final : public Extender {
 public:
  InvExtender(std::span<const Value> ranks, Index domain) : Extender(ranks), counts_(domain) {}
  [[nodiscard]] bool supports_snapshots() const noexcept override { return true; }

 protected:
  Value insert(Value v, bool at_right) override {
    const Value c = contribution(v, at_right);
    counts_.add(v, 1);
    ++size_;
    return c;
  }
  Value erase(Value v, bool at_right) override {
    counts_.add(v, -1);
    --size_;
    return contribution(v, at_right);
  }

 private:
  // Elements to the left that are greater, or to the right that are smaller.
  [[nodiscard]] Value contribution(Value v, bool at_right) const {
    return at_right ? size_ - counts_.count_less(v + 1) : counts_.count_less(v);
  }

  FenwickCounter counts_;
  Value size_ = 0;
};

class EqpExtender final : public Extender {
 public:
  EqpExtender(std::span<const Value> ranks, Index domain) : Extender(ranks), counts_(domain, 0) {}
  [[nodiscard]] bool supports_snapshots() const noexcept override { return true; }

 protected:
  Value insert(Value v, bool) override { return counts_[v]++; }
  Value erase(Value v, bool) override { return --counts_[v]; }

 private:
  std::vector<Value> counts_;
};

// Extender over `ranks`, which must be rank-normalized and outlive the result.
[[nodiscard]] inline std::unique_ptr<Extender> make_extender(const PairFunction& f,
                                                             std::span<const Value> ranks,
                                                             Index domain) {
  switch (f.kind()) {
    case PairKind::kInv:
      return std::make_unique<InvExtender>(ranks, domain);
    case PairKind::kEqp:
      return std::make_unique<EqpExtender>(ranks, domain);
    default:
      throw CapabilityError("no incremental extender for pair function '" + f.name() + "'");
  }
}

inline void require_extender(const PairFunction& f) {
  if (!f.rank_invariant()) {
    throw CapabilityError("no incremental extender for pair function '" + f.name() + "'");
  }
}

}  // namespace triq
