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

#include "sqot/random.hpp"

#include <stdexcept>

namespace sqot {

uint64_t RandomSource::uniform_below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be nonzero");
    }
    // Reject the top partial block so every residue is equally likely.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    while (true) {
        uint64_t x = engine_();
        if (x <= limit) {
            return x % bound;
        }
    }
}

uint64_t splitmix64_mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

uint64_t derive_trial_seed(uint64_t master_seed, uint64_t trial_index) {
    constexpr uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(master_seed + (trial_index + 1) * golden_gamma);
}

}  // namespace sqot
