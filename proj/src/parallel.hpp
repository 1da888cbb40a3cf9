/*
Copyright 2026 The jacsyz Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Ordered fan-out: jobs run on a small pool, results are handed back in
// index order so callers stay deterministic regardless of scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jacsyz {

/// Worker count: `requested` if nonzero, else JACSYZ_THREADS, else the
/// hardware concurrency. Never more than the number of jobs.
inline unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("JACSYZ_THREADS"); env && *env) n = std::strtoul(env, nullptr, 10);
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

/// Runs work(i) for i in [0, n) and calls emit(i) for every finished index
/// in increasing order. emit is serialized; returning false from it stops
/// the run (jobs already started still finish but are not emitted). The
/// first exception thrown by work or emit is rethrown here.
template <class Work, class Emit>
void ordered_parallel(std::size_t n, unsigned threads, Work&& work, Emit&& emit) {
  threads = worker_count(threads, n);
  std::vector<char> done(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::size_t emitted = 0;
  std::exception_ptr failure;

  auto run = [&] {
    for (std::size_t i; !stop && (i = next.fetch_add(1)) < n;) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      std::lock_guard lock(mu);
      done[i] = 1;
      while (!stop && emitted < n && done[emitted]) {
        try {
          if (!emit(emitted)) stop = true;
        } catch (...) {
          if (!failure) failure = std::current_exception();
          stop = true;
        }
        ++emitted;
      }
    }
  };
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace jacsyz
