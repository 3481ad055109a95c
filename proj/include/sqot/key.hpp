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
#include <vector>

#include "sqot/random.hpp"

namespace sqot {

/// Rotation counts s_i in [0, 2^n) for security parameter n.
struct SecretKey {
    std::vector<uint64_t> s;
    unsigned n = 1;

    /// Throws std::invalid_argument if n is unsupported, the length differs
    /// from expected_length (when nonzero), or an entry is out of range.
    void validate(size_t expected_length = 0) const;

    bool operator==(const SecretKey &) const = default;
};

/// Each entry uniform on [0, 2^n).
SecretKey sample_key(size_t length, unsigned n, RandomSource &rng);

}  // namespace sqot
