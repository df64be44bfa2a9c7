// Copyright 2026 The TopKAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPKAT_SRC_PARALLEL_H_
#define TOPKAT_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace topkat::internal {

// Runs fn(index, worker) for every index below `count`. Worker w takes the
// indices congruent to w modulo `jobs`, so per-worker results depend only on
// `jobs`, and anything summed over workers does not depend on it at all.
template <typename Fn>
void ParallelFor(std::uint64_t count, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += jobs) fn(i, w);
    });
  }
  for (auto& t : workers) t.join();
}

// Lowest index below `count` for which hit(index) holds. Workers stop once
// they pass the best hit found so far, so the answer matches a sequential
// scan for every `jobs`.
template <typename Fn>
std::optional<std::uint64_t> FindFirst(std::uint64_t count, int jobs, Fn hit) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  jobs = std::max(1, jobs);
  auto scan = [&](int w) {
    for (std::uint64_t i = w; i < count; i += jobs) {
      if (i > best.load(std::memory_order_relaxed)) return;
      if (hit(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (jobs == 1) {
    scan(0);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) workers.emplace_back(scan, w);
    for (auto& t : workers) t.join();
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace topkat::internal

#endif  // TOPKAT_SRC_PARALLEL_H_
