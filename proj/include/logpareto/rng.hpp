// Copyright 2026 The logpareto Authors
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

#ifndef LOGPARETO_RNG_HPP_
#define LOGPARETO_RNG_HPP_

#include <cstdint>

namespace logpareto {

// Counter-based uniform generator built on the splitmix64 finalizer.
// Draw i of stream s under seed k is a pure function of (k, s, i), so
// batches regenerate bit-identically and trials can be partitioned across
// workers in any order.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix64(seed + kGolden * mix64(stream))) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return mix64(base_ + kGolden * (counter + 1));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t base_;
};

}  // namespace logpareto

#endif  // LOGPARETO_RNG_HPP_
