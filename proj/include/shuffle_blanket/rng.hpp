// Copyright 2026 The Shuffle Blanket Authors
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

#pragma once

#include <cstdint>

namespace shuffle_blanket {

// splitmix64 (Steele, Lea, Flood 2014). Fully specified 64-bit generator, so
// sequences are reproducible across platforms from (algorithm, seed) alone,
// independent of any standard-library distribution implementation.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in (lo, hi]; never returns lo exactly.
  double next_in(double lo, double hi) {
    return hi - (hi - lo) * next_unit();
  }

 private:
  std::uint64_t state_;
};

inline const char* kPrngAlgorithm = "splitmix64";

}  // namespace shuffle_blanket
