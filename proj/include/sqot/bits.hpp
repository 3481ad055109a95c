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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqot {

/// A bit string stored one bit per byte, each entry 0 or 1.
using BitString = std::vector<uint8_t>;

/// Parses "0110"-style text. Throws std::invalid_argument on other characters.
BitString parse_bits(std::string_view text);

std::string format_bits(std::span<const uint8_t> bits);

/// XOR of all bits.
uint8_t parity(std::span<const uint8_t> bits);

/// Most-significant-bit-first hex. A trailing partial nibble is zero-padded
/// in its low bits.
std::string bits_to_hex(std::span<const uint8_t> bits);

/// Inverse of bits_to_hex for a known bit count.
BitString hex_to_bits(std::string_view hex, size_t bit_count);

}  // namespace sqot
