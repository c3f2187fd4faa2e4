// Copyright 2026 The charnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARNOISE_PARALLEL_HPP_
#define CHARNOISE_PARALLEL_HPP_

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "charnoise/error.hpp"

namespace charnoise {

// Worker count: explicit flag, then the NOISE_JOBS environment variable,
// then the number of logical cores.
inline unsigned ResolveJobs(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw ConfigError("--jobs must be at least 1");
    return static_cast<unsigned>(*flag);
  }
  if (const char* env = std::getenv("NOISE_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1) {
      throw ConfigError("NOISE_JOBS must be a positive integer, got '" + std::string(env) + "'");
    }
    return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Applies `fn` to every item on up to `jobs` threads, each owning a
// contiguous slice. Results keep input order. The first exception (by item
// order) is rethrown after all workers finish.
template <typename T, typename Fn>
auto ParallelMap(std::span<const T> items, unsigned jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using Result = std::invoke_result_t<Fn&, const T&>;
  std::vector<std::optional<Result>> slots(items.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, items.size()));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    const std::size_t begin = items.size() * w / workers;
    const std::size_t end = items.size() * (w + 1) / workers;
    try {
      for (std::size_t i = begin; i < end; ++i) slots[i].emplace(fn(items[i]));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> results;
  results.reserve(items.size());
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace charnoise

#endif  // CHARNOISE_PARALLEL_HPP_
