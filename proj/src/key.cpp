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

#include "sqot/key.hpp"

#include <stdexcept>
#include <string>

#include "sqot/qubit.hpp"

namespace sqot {

void SecretKey::validate(size_t expected_length) const {
    if (n < 1 || n > max_security_parameter) {
        throw std::invalid_argument("secret key: unsupported security parameter " + std::to_string(n));
    }
    if (expected_length != 0 && s.size() != expected_length) {
        throw std::invalid_argument("secret key: expected " + std::to_string(expected_length) + " entries, got " +
                                    std::to_string(s.size()));
    }
    const uint64_t bound = uint64_t{1} << n;
    for (uint64_t v : s) {
        if (v >= bound) {
            throw std::invalid_argument("secret key: entry " + std::to_string(v) + " out of range for n = " +
                                        std::to_string(n));
        }
    }
}

SecretKey sample_key(size_t length, unsigned n, RandomSource &rng) {
    SecretKey key{std::vector<uint64_t>(length), n};
    key.validate();
    const uint64_t bound = uint64_t{1} << n;
    for (auto &v : key.s) {
        v = rng.uniform_below(bound);
    }
    return key;
}

}  // namespace sqot
