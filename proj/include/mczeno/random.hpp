// Copyright 2026 The mczeno Authors.
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

#pragma once

#include <cstdint>

namespace mczeno {

/// Counter-based uniform stream keyed by (seed, trial). Draw number c is a
/// pure function of (seed, trial, c), so trials need no shared state.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t trial) noexcept
      : key_(mix(mix(seed) ^ (trial * 0xD1B54A32D192ED03ULL))) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    const std::uint64_t bits = mix(key_ ^ mix(counter_++ + 0xA0761D6478BD642FULL));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  std::uint64_t draws() const noexcept { return counter_; }

  /// splitmix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mczeno
