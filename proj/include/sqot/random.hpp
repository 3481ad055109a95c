// Copyright 2026 The sqot Authors
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
#include <random>

namespace sqot {

/// Deterministic 64-bit random source.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Conversions to doubles and bounded integers are done here rather
/// than through <random> distributions, which are implementation-defined, so a
/// given seed produces the same stream on every platform.
class RandomSource {
   public:
    explicit RandomSource(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    uint8_t bit() {
        return static_cast<uint8_t>(engine_() >> 63);
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t uniform_below(uint64_t bound);

   private:
    std::mt19937_64 engine_;
};

/// The splitmix64 output finalizer. A bijection on 64-bit words.
uint64_t splitmix64_mix(uint64_t x);

/// Seed for trial `trial_index` of an experiment seeded with `master_seed`.
/// Injective in trial_index for a fixed master seed.
uint64_t derive_trial_seed(uint64_t master_seed, uint64_t trial_index);

}  // namespace sqot
