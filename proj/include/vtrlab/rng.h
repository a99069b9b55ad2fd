// Copyright 2026 The vtr-lab Authors.
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

#ifndef VTRLAB_RNG_H_
#define VTRLAB_RNG_H_

#include <cstdint>

namespace vtrlab {

// 64-bit finalizer of SplitMix64 (Stafford variant 13).
std::uint64_t Mix64(std::uint64_t x);

// Counter-based SplitMix64 stream. Draw i (1-based) is
// Mix64(key + i * 0x9E3779B97F4A7C15), so any draw can be reproduced from
// (key, i) alone and the output is identical on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t NextU64();

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform();

  // Uniform integer in [0, n). n must be positive.
  int UniformInt(int n);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Per-run key: Mix64(master ^ ((run_index + 1) * golden)). Runs never share
// a stream and no coordination between workers is needed.
std::uint64_t DeriveRunSeed(std::uint64_t master_seed, std::uint64_t run_index);

}  // namespace vtrlab

#endif  // VTRLAB_RNG_H_
