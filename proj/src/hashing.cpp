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

#include "sqot/hashing.hpp"

#include <stdexcept>
#include <utility>

namespace sqot {

namespace {

void check_k(size_t k) {
    if (k == 0 || k % 2 != 0) {
        throw std::invalid_argument("hash input length k must be even and positive, got " + std::to_string(k));
    }
}

}  // namespace

HashFunctionGF2::HashFunctionGF2(size_t k, std::vector<BitString> rows, BitString offset)
    : k_(k), rows_(std::move(rows)), offset_(std::move(offset)) {
    check_k(k);
    if (rows_.size() != k / 2 || offset_.size() != k / 2) {
        throw std::invalid_argument("hash matrix must be (k/2) x k with a k/2-bit offset");
    }
    for (const auto &row : rows_) {
        if (row.size() != k) {
            throw std::invalid_argument("hash matrix row has wrong length");
        }
    }
}

BitString HashFunctionGF2::operator()(std::span<const uint8_t> m) const {
    if (m.size() != k_) {
        throw std::invalid_argument("eval_hash: expected " + std::to_string(k_) + " input bits, got " +
                                    std::to_string(m.size()));
    }
    BitString out(offset_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint8_t acc = 0;
        for (size_t c = 0; c < k_; ++c) {
            acc ^= rows_[r][c] & m[c];
        }
        out[r] ^= acc;
    }
    return out;
}

size_t HashFunctionGF2::rank() const {
    auto m = rows_;
    size_t rank = 0;
    for (size_t col = 0; col < k_ && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && !m[pivot][col]) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][col]) {
                for (size_t c = col; c < k_; ++c) {
                    m[r][c] ^= m[rank][c];
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::string> HashFunctionGF2::rows_hex() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(bits_to_hex(row));
    }
    return out;
}

std::string HashFunctionGF2::offset_hex() const {
    return bits_to_hex(offset_);
}

HashFunctionGF2 HashFunctionGF2::from_hex(size_t k, const std::vector<std::string> &rows, const std::string &offset) {
    check_k(k);
    std::vector<BitString> parsed;
    parsed.reserve(rows.size());
    for (const auto &row : rows) {
        parsed.push_back(hex_to_bits(row, k));
    }
    return HashFunctionGF2(k, std::move(parsed), hex_to_bits(offset, k / 2));
}

HashFunctionGF2 sample_hash(size_t k, RandomSource &rng) {
    check_k(k);
    std::vector<BitString> rows(k / 2, BitString(k));
    for (auto &row : rows) {
        for (auto &b : row) {
            b = rng.bit();
        }
    }
    BitString offset(k / 2);
    for (auto &b : offset) {
        b = rng.bit();
    }
    return HashFunctionGF2(k, std::move(rows), std::move(offset));
}

}  // namespace sqot
