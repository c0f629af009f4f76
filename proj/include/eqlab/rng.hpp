// Copyright 2026 The eqlab Authors
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

#ifndef EQLAB_RNG_HPP_
#define EQLAB_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

namespace eqlab {

// Deterministic random stream. All sampling goes through the explicit
// methods below (never through std:: distributions) so that runs with the
// same seed produce bit-identical trajectories on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(Scramble(seed)) {}

  uint64_t NextUint64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(NextUint64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., n-1}, unbiased via rejection.
  int UniformInt(int n);

  // Index sampled from a probability vector (entries >= 0, sum ~ 1).
  int SampleIndex(std::span<const double> probabilities);

  // Decorrelated child seed for stream `index` of a run seeded with `seed`.
  static uint64_t DeriveStream(uint64_t seed, uint64_t index);

 private:
  static uint64_t Scramble(uint64_t x);
  std::mt19937_64 gen_;
};

}  // namespace eqlab

#endif  // EQLAB_RNG_HPP_
