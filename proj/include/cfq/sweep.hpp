// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef CFQ_SWEEP_H_
#define CFQ_SWEEP_H_

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace cfq {

// Applies fn to every task on a bounded worker pool and returns results
// in task order. Workers pull indices from a shared counter and write to
// disjoint slots, so the merged output is independent of scheduling; the
// first worker exception is rethrown on the caller thread.
template <typename Task, typename Fn>
auto ParallelMap(const std::vector<Task>& tasks, int jobs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn&, const Task&>> {
  using Result = std::invoke_result_t<Fn&, const Task&>;
  std::vector<Result> out(tasks.size());
  if (tasks.empty()) return out;
  if (jobs < 1) jobs = 1;
  if (static_cast<size_t>(jobs) > tasks.size())
    jobs = static_cast<int>(tasks.size());
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = fn(tasks[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        out[i] = fn(tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace cfq

#endif  // CFQ_SWEEP_H_
