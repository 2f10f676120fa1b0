#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/normalize.hpp"
#include "triq/core/pair_function.hpp"
#include "triq/rangequery/extender.hpp"
#include "triq/rangequery/mo.hpp"
#include "triq/rangequery/persistent_counter.hpp"

namespace triq {

// Online Mo. For every block start s = j*B the answers and multiset
// snapshots of [s, k] are precomputed for all k >= s; a query [l, r] resumes
// from the snapshot at the first block start >= l and extends to the left
// on a private branch of the persistent multiset.
//
// Immutable after construction; query() is safe to call concurrently.
class MoOnlineIndex {
 public:
  MoOnlineIndex(const PairFunction& f, const IntArray& a, Index block)
      : kind_(f.kind()), ranks_(normalize(a)), block_(std::max<Index>(block, 1)),
        counter_(distinct_count(a)) {
    require_extender(f);
    if (!make_extender(f, ranks_.values(), distinct_count(a))->supports_snapshots()) {
      throw CapabilityError("extender for '" + f.name() + "' has no persistent form");
    }
    const Index n = ranks_.size();
    for (Index s = 0; s < n; s += block_) {
      auto& row = rows_.emplace_back();
      row.reserve(n - s);
      PersistentCounter::Root root = PersistentCounter::kEmpty;
      Value answer = 0;
      for (Index k = s; k < n; ++k) {
        const Value v = ranks_[k];
        answer += gain(counter_, root, v, /*at_right=*/true);
        root = counter_.insert(root, v);
        row.push_back({root, answer});
        ++counters().extender_steps;
      }
    }
  }

  [[nodiscard]] Value query(const Range& q) const {
    q.validate(ranks_.size());
    const Index l = q.l - 1;
    const Index r = q.r - 1;
    const Index start = (l + block_ - 1) / block_ * block_;
    PersistentCounter branch = counter_.branch();
    PersistentCounter::Root root;
    Value answer;
    Index front;
    if (start > r) {
      root = branch.insert(PersistentCounter::kEmpty, ranks_[r]);
      answer = 0;
      front = r;
    } else {
      const Snapshot& snap = rows_[start / block_][r - start];
      root = snap.root;
      answer = snap.answer;
      front = start;
    }
    while (front > l) {
      const Value v = ranks_[--front];
      answer += gain(branch, root, v, /*at_right=*/false);
      root = branch.insert(root, v);
      ++counters().extender_steps;
    }
    return answer;
  }

  [[nodiscard]] Index block() const noexcept { return block_; }
  [[nodiscard]] Index snapshot_count() const noexcept {
    Index s = 0;
    for (const auto& row : rows_) s += row.size();
    return s;
  }

 private:
  struct Snapshot {
    PersistentCounter::Root root;
    Value answer;
  };

  [[nodiscard]] Value gain(const PersistentCounter& c, PersistentCounter::Root root, Value v,
                           bool at_right) const {
    if (kind_ == PairKind::kEqp) return c.count_equal(root, v);
    return at_right ? c.count_greater(root, v) : c.count_less(root, v);
  }

  PairKind kind_;
  IntArray ranks_;
  Index block_;
  PersistentCounter counter_;
  std::vector<std::vector<Snapshot>> rows_;
};

// Wraps a structure that is built for an expected query count. Starts by
// assuming one query; whenever the count is exceeded the guess doubles and
// the structure is rebuilt.
template <typename Structure>
class Adaptive {
 public:
  using Builder = std::function<Structure(Index q_guess)>;

  explicit Adaptive(Builder build, Index initial_guess = 1)
      : build_(std::move(build)), guess_(std::max<Index>(initial_guess, 1)),
        current_(std::make_unique<Structure>(build_(guess_))) {}

  Value query(const Range& q) {
    if (answered_ + 1 > guess_) {
      while (guess_ < answered_ + 1) guess_ *= 2;
      current_ = std::make_unique<Structure>(build_(guess_));
      ++rebuilds_;
    }
    ++answered_;
    return current_->query(q);
  }

  [[nodiscard]] Index guess() const noexcept { return guess_; }
  [[nodiscard]] Index rebuilds() const noexcept { return rebuilds_; }
  [[nodiscard]] const Structure& current() const noexcept { return *current_; }

 private:
  Builder build_;
  Index guess_;
  Index answered_ = 0;
  Index rebuilds_ = 0;
  std::unique_ptr<Structure> current_;
};

class MoOnline : public Adaptive<MoOnlineIndex> {
 public:
  MoOnline(const PairFunction& f, const IntArray& a, Index initial_guess = 1)
      : Adaptive<MoOnlineIndex>(
            [f, a](Index q) { return MoOnlineIndex(f, a, mo_block_size(a.size(), q)); },
            initial_guess) {}
};

// Answers the batch one query at a time through the adaptive online index.
[[nodiscard]] inline std::vector<Value> mo_online_batch(const PairFunction& f, const IntArray& a,
                                                        std::span<const Range> queries) {
  validate_all(queries, a.size());
  MoOnline online(f, a);
  std::vector<Value> out;
  out.reserve(queries.size());
  for (const Range& q : queries) out.push_back(online.query(q));
  return out;
}

}  // namespace triq
