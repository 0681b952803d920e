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

#include "ensemble_shapley/rng.hpp"

namespace ensemble_shapley::rng {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed,
                     std::initializer_list<std::uint64_t> coordinates) noexcept {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t c : coordinates) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
  return h;
}

double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double uniform_at(std::uint64_t seed,
                  std::initializer_list<std::uint64_t> coordinates) noexcept {
  return to_unit(derive(seed, coordinates));
}

std::uint64_t Stream::below(std::uint64_t bound) {
  // Rejection on the largest multiple of bound that fits in 64 bits.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= limit) return r % bound;
  }
}

}  // namespace ensemble_shapley::rng
