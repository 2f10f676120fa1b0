#pragma once

#include <cstdint>
#include <vector>

#include "triq/core/types.hpp"

namespace triq {

// Persistent multiset of values in [0, domain) as a path-copying segment
// tree. Every insert returns a new root and leaves older roots intact.
//
// A branch() shares the frozen node arena of its parent read-only and keeps
// its own nodes locally, so versions derived from a snapshot can be modified
// without touching the shared structure.
class PersistentCounter {
 public:
  using Root = std::uint32_t;
  static constexpr Root kEmpty = 0;

  explicit PersistentCounter(Index domain) : domain_(std::max<Index>(domain, 1)) {
    local_.push_back({0, 0, 0});  // kEmpty: children point to itself
  }

  [[nodiscard]] PersistentCounter branch() const {
    PersistentCounter b(domain_);
    b.local_.clear();
    b.base_ = this;
    b.base_size_ = size();
    return b;
  }

  [[nodiscard]] Root insert(Root root, Value v) { return insert(root, 0, domain_, v); }

  // Number of stored values in [lo, hi).
  [[nodiscard]] Value count(Root root, Value lo, Value hi) const {
    if (lo >= hi) return 0;
    return count(root, 0, domain_, lo, hi);
  }
  [[nodiscard]] Value count_less(Root root, Value v) const { return count(root, 0, v); }
  [[nodiscard]] Value count_greater(Root root, Value v) const {
    return count(root, v + 1, static_cast<Value>(domain_));
  }
  [[nodiscard]] Value count_equal(Root root, Value v) const { return count(root, v, v + 1); }

  [[nodiscard]] Index size() const noexcept { return base_size_ + local_.size(); }

 private:
  struct Node {
    Root left;
    Root right;
    Value count;
  };

  [[nodiscard]] const Node& node(Root id) const {
    return id < base_size_ ? base_->node(id) : local_[id - base_size_];
  }

  Root push(Node n) {
    local_.push_back(n);
    return static_cast<Root>(size() - 1);
  }

  Root insert(Root root, Index lo, Index hi, Value v) {
    const Node cur = node(root);
    if (hi - lo == 1) return push({kEmpty, kEmpty, cur.count + 1});
    const Index mid = lo + (hi - lo) / 2;
    if (static_cast<Index>(v) < mid) {
      const Root l = insert(cur.left, lo, mid, v);
      return push({l, cur.right, cur.count + 1});
    }
    const Root r = insert(cur.right, mid, hi, v);
    return push({cur.left, r, cur.count + 1});
  }

  [[nodiscard]] Value count(Root root, Index lo, Index hi, Value qlo, Value qhi) const {
    const Node& cur = node(root);
    if (cur.count == 0) return 0;
    if (qlo <= static_cast<Value>(lo) && static_cast<Value>(hi) <= qhi) return cur.count;
    const Index mid = lo + (hi - lo) / 2;
    Value s = 0;
    if (qlo < static_cast<Value>(mid)) s += count(cur.left, lo, mid, qlo, qhi);
    if (qhi > static_cast<Value>(mid)) s += count(cur.right, mid, hi, qlo, qhi);
    return s;
  }

  Index domain_;
  const PersistentCounter* base_ = nullptr;
  Index base_size_ = 0;
  std::vector<Node> local_;
};

}  // namespace triq
