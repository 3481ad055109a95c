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

#include <cstddef>
#include <string>
#include <vector>

#include "sqot/bits.hpp"
#include "sqot/random.hpp"

namespace sqot {

/// Affine map h(x) = A x xor c over GF(2), from k bits to k/2 bits.
///
/// With A and c uniform this is a universal family: any fixed pair x != y
/// collides with probability exactly 2^-(k/2).
class HashFunctionGF2 {
   public:
    /// Throws std::invalid_argument on odd or nonpositive k, or when the
    /// matrix is not (k/2) x k or the offset is not k/2 bits.
    HashFunctionGF2(size_t k, std::vector<BitString> rows, BitString offset);

    size_t input_bits() const {
        return k_;
    }
    size_t output_bits() const {
        return k_ / 2;
    }
    const std::vector<BitString> &rows() const {
        return rows_;
    }
    const BitString &offset() const {
        return offset_;
    }

    /// A m xor c. Throws std::invalid_argument when |m| != k.
    BitString operator()(std::span<const uint8_t> m) const;

    /// Rank of A over GF(2).
    size_t rank() const;

    /// Rows and offset as MSB-first hex, one string per row.
    std::vector<std::string> rows_hex() const;
    std::string offset_hex() const;
    static HashFunctionGF2 from_hex(size_t k, const std::vector<std::string> &rows, const std::string &offset);

    bool operator==(const HashFunctionGF2 &) const = default;

   private:
    size_t k_;
    std::vector<BitString> rows_;
    BitString offset_;
};

/// Draws A and c uniformly: all row bits first, row-major, then the offset.
HashFunctionGF2 sample_hash(size_t k, RandomSource &rng);

inline BitString eval_hash(const HashFunctionGF2 &h, std::span<const uint8_t> m) {
    return h(m);
}

}  // namespace sqot
