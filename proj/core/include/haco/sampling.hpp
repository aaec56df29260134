// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HACO_SAMPLING_HPP_
#define HACO_SAMPLING_HPP_

#include <complex>
#include <cstdint>

#include "haco/dual_group.hpp"

namespace haco {

// Deterministic splitmix64 stream. The standard <random> engines are
// implementation-defined through their distributions; this one produces the
// same values on every platform, which keeps verification reports and
// property tests reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, n), n >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n);

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, 1).
  double unit();

  // Standard normal via Box-Muller (no cached spare, no rejection).
  double gaussian();

  std::complex<double> complex_gaussian();

  bool flip() { return (next_u64() & 1) != 0; }

  // Stable substream derivation so independent checks never share state.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

}  // namespace haco

#endif  // HACO_SAMPLING_HPP_
