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

#include "eqlab/rng.hpp"

#include "eqlab/util.hpp"

namespace eqlab {

namespace {
uint64_t SplitMix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

uint64_t Rng::Scramble(uint64_t x) {
  uint64_t state = x;
  return SplitMix64(state);
}

uint64_t Rng::DeriveStream(uint64_t seed, uint64_t index) {
  uint64_t state = seed;
  uint64_t value = SplitMix64(state);
  for (uint64_t i = 0; i <= index; ++i) {
    value = SplitMix64(state);
  }
  return value;
}

int Rng::UniformInt(int n) {
  EQLAB_CHECK(n > 0, "UniformInt requires n > 0");
  const uint64_t bound = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = NextUint64();
  } while (draw >= limit);
  return static_cast<int>(draw % bound);
}

int Rng::SampleIndex(std::span<const double> probabilities) {
  EQLAB_CHECK(!probabilities.empty(), "SampleIndex on empty distribution");
  const double u = UniformDouble();
  double cumulative = 0.0;
  int last_positive = -1;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] > 0.0) last_positive = static_cast<int>(i);
    cumulative += probabilities[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  // Rounding can leave the cumulative sum a hair under 1.
  EQLAB_CHECK(last_positive >= 0, "SampleIndex on all-zero distribution");
  return last_positive;
}

}  // namespace eqlab
