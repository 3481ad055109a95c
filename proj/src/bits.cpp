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

#include "sqot/bits.hpp"

#include <stdexcept>

namespace sqot {

BitString parse_bits(std::string_view text) {
    BitString out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("parse_bits: expected only '0' and '1'");
        }
        out.push_back(static_cast<uint8_t>(c - '0'));
    }
    return out;
}

std::string format_bits(std::span<const uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (uint8_t b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

uint8_t parity(std::span<const uint8_t> bits) {
    uint8_t p = 0;
    for (uint8_t b : bits) {
        p ^= b & 1;
    }
    return p;
}

std::string bits_to_hex(std::span<const uint8_t> bits) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits.size()) {
                nibble |= bits[i + j] & 1;
            }
        }
        out.push_back(digits[nibble]);
    }
    return out;
}

BitString hex_to_bits(std::string_view hex, size_t bit_count) {
    if (hex.size() != (bit_count + 3) / 4) {
        throw std::invalid_argument("hex_to_bits: hex length does not match bit count");
    }
    BitString out;
    out.reserve(bit_count);
    for (char c : hex) {
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            nibble = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            nibble = c - 'A' + 10;
        } else {
            throw std::invalid_argument("hex_to_bits: invalid hex digit");
        }
        for (int j = 3; j >= 0; --j) {
            if (out.size() < bit_count) {
                out.push_back(static_cast<uint8_t>((nibble >> j) & 1));
            } else if ((nibble >> j) & 1) {
                throw std::invalid_argument("hex_to_bits: nonzero padding bits");
            }
        }
    }
    return out;
}

}  // namespace sqot
