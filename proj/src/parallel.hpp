// Index-range map-reduce with exact accumulation.
#pragma once

#include "cyclo/exact.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cyclo::detail {

/// Sums task(i) for i in [0, count) using up to `jobs` threads. Task i goes to
/// worker i % jobs; the result does not depend on the split.
template <class Task>
BigInt parallel_sum(std::size_t count, unsigned jobs, Task&& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < count; ++i) sum += task(i);
    return sum;
  }
  std::vector<BigInt> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) partial[w] += task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  BigInt sum = 0;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace cyclo::detail
