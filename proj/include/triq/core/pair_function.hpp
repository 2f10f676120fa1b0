#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "triq/core/normalize.hpp"
#include "triq/core/types.hpp"
#include "triq/reductions/decomposition.hpp"

namespace triq {

enum class PairKind { kInv, kEqp, kMul, kCustom };

// Binary function f : Z^2 -> Z whose pair sums the range problems ask for.
class PairFunction {
 public:
  using Evaluator = std::function<Value(Value, Value)>;

  [[nodiscard]] static PairFunction inv() {
    return {PairKind::kInv, "inv", [](Value x, Value y) -> Value { return x > y ? 1 : 0; }};
  }
  [[nodiscard]] static PairFunction eqp() {
    return {PairKind::kEqp, "eqp", [](Value x, Value y) -> Value { return x == y ? 1 : 0; }};
  }
  [[nodiscard]] static PairFunction mul() {
    return {PairKind::kMul, "mul", [](Value x, Value y) { return x * y; }};
  }
  [[nodiscard]] static PairFunction custom(std::string name, Evaluator eval,
                                           std::optional<Decomposition> decomposition = {}) {
    PairFunction f{PairKind::kCustom, std::move(name), std::move(eval)};
    f.decomposition_ = std::move(decomposition);
    return f;
  }

  [[nodiscard]] Value operator()(Value x, Value y) const { return eval_(x, y); }
  [[nodiscard]] PairKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  // True when f(x, y) depends only on the relative order of x and y, so that
  // rank normalization of the array leaves every answer unchanged.
  [[nodiscard]] bool rank_invariant() const noexcept {
    return kind_ == PairKind::kInv || kind_ == PairKind::kEqp;
  }

  // Decomposition usable on an array with `domain` distinct values, if any.
  [[nodiscard]] std::optional<Decomposition> decomposition(Index domain) const {
    switch (kind_) {
      case PairKind::kInv:
        return inv_decomposition(bits_for(domain));
      case PairKind::kEqp:
        return eqp_decomposition();
      case PairKind::kMul:
        return std::nullopt;
      case PairKind::kCustom:
        return decomposition_;
    }
    return std::nullopt;
  }

 private:
  PairFunction(PairKind kind, std::string name, Evaluator eval)
      : kind_(kind), name_(std::move(name)), eval_(std::move(eval)) {}

  PairKind kind_;
  std::string name_;
  Evaluator eval_;
  std::optional<Decomposition> decomposition_;
};

}  // namespace triq
