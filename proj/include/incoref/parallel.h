// Copyright 2026 The incoref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INCOREF_PARALLEL_H_
#define INCOREF_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace incoref {

// Calls fn(i) for every i in [0, n) on up to `threads` workers. Results must
// be written to slot i by the caller, which keeps output order independent of
// scheduling. The first exception thrown by any call is rethrown.
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn fn) {
  std::size_t workers = std::min<std::size_t>(threads < 1 ? 1 : threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Maps `in` to a vector of the same length and order.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In> &in, int threads, Fn fn) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  ParallelFor(in.size(), threads, [&](std::size_t i) { out[i] = fn(in[i]); });
  return out;
}

}  // namespace incoref

#endif  // INCOREF_PARALLEL_H_
