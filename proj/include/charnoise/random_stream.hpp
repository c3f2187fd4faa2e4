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

#ifndef CHARNOISE_RANDOM_STREAM_HPP_
#define CHARNOISE_RANDOM_STREAM_HPP_

#include <cstdint>

#include "charnoise/rational.hpp"

namespace charnoise {

// Counter-based random stream keyed by (seed, copy_index, line_index).
//
// Algorithm (stable across releases; changing it changes every noised
// corpus):
//   key    = Mix(Mix(Mix(seed) ^ copy_index) ^ line_index)
//   draw_i = Mix(key + (i + 1) * 0x9E3779B97F4A7C15)   for i = 0, 1, 2, ...
// where Mix is the SplitMix64 finalizer. Each line owns an independent
// stream, so lines can be processed in any order or on any worker.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t copy_index,
               std::uint64_t line_index)
      : key_(Mix(Mix(Mix(seed) ^ copy_index) ^ line_index)) {}

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t Next() {
    ++counter_;
    return Mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
  std::uint64_t Below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = Next();
      if (x >= threshold) return x % bound;
    }
  }

  // True with probability exactly p (p is a rational in [0, 1]).
  bool Bernoulli(const Rational& p) {
    const auto num = static_cast<std::uint64_t>(p.numerator());
    const auto den = static_cast<std::uint64_t>(p.denominator());
    if (num == 0) return false;
    if (num == den) return true;
    return Below(den) < num;
  }

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace charnoise

#endif  // CHARNOISE_RANDOM_STREAM_HPP_
