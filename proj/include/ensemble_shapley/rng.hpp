// Copyright 2026 The ensemble-shapley Authors.
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ensemble_shapley::rng {

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives an independent seed from a base seed and a list of stream
/// coordinates, e.g. derive(seed, {point}) or derive(seed, {stream, i, j}).
std::uint64_t derive(std::uint64_t seed,
                     std::initializer_list<std::uint64_t> coordinates) noexcept;

/// Maps the top 53 bits of a word to a double in [0, 1).
double to_unit(std::uint64_t bits) noexcept;

/// Counter-based uniform draw on [0, 1): a pure function of its arguments, so
/// a draw indexed by (point, model) never depends on evaluation order.
double uniform_at(std::uint64_t seed,
                  std::initializer_list<std::uint64_t> coordinates) noexcept;

/// Sequential stream over std::mt19937_64. Conversions to doubles and bounded
/// integers are done here rather than with <random> distributions, whose
/// output is implementation-defined, so sequences match across toolchains.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(mix64(seed)) {}

  double uniform() { return to_unit(engine_()); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ensemble_shapley::rng
