#pragma once

#include <cstdint>

namespace triq {

// Operation counters read by the benchmark harness and the budget tests.
// Thread-local; parallel_for folds worker counts back into the caller.
struct OpCounters {
  std::uint64_t extender_steps = 0;
  std::uint64_t matmul_calls = 0;
  std::uint64_t inner_solver_calls = 0;

  OpCounters& operator+=(const OpCounters& o) {
    extender_steps += o.extender_steps;
    matmul_calls += o.matmul_calls;
    inner_solver_calls += o.inner_solver_calls;
    return *this;
  }
};

inline OpCounters& counters() {
  thread_local OpCounters c;
  return c;
}

inline void reset_counters() { counters() = {}; }

}  // namespace triq
