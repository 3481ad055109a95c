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
#include <span>

#include "sqot/bits.hpp"
#include "sqot/key.hpp"

namespace sqot {

/// Each s_i as an n-bit big-endian number, concatenated.
BitString key_to_bits(const SecretKey &key);

/// Inverse of key_to_bits. Throws std::invalid_argument when the length is
/// not a multiple of n.
SecretKey bits_to_key(std::span<const uint8_t> bits, unsigned n);

struct ChiSquareResult {
    double statistic = 0.0;
    double critical_value = 0.0;
    size_t degrees_of_freedom = 0;
    bool pass = false;
};

/// Goodness-of-fit of non-overlapping symbol_width-bit symbols against the
/// uniform distribution on 2^symbol_width bins. Trailing bits that do not
/// fill a symbol are ignored. Throws std::invalid_argument when fewer than 5
/// symbols are expected per bin.
ChiSquareResult chi_square_test(std::span<const uint8_t> bits, unsigned symbol_width, double alpha);

struct SerialCorrelationResult {
    /// Lag-1 Pearson correlation; 0 when degenerate.
    double coefficient = 0.0;
    /// z_{alpha/2} / sqrt(N).
    double threshold = 0.0;
    /// Either lagged sequence has zero variance.
    bool degenerate = false;
    bool pass = false;
};

/// Throws std::invalid_argument for fewer than 100 bits.
SerialCorrelationResult serial_correlation_test(std::span<const uint8_t> bits, double alpha);

inline constexpr size_t min_serial_correlation_bits = 100;
inline constexpr unsigned max_chi_square_width = 4;

/// Largest symbol width <= 4 with at least 5 expected symbols per bin, or 0
/// when even 1-bit symbols are too few.
unsigned chi_square_width_for(size_t bit_count);

/// Outcome of the opening-phase key check: chi-square plus lag-1 serial
/// correlation at the same significance level. A test that is not applicable
/// to the sample size counts as passing.
struct RandomnessVerdict {
    double alpha = 0.01;
    bool chi_square_applicable = false;
    unsigned chi_square_width = 0;
    double chi_square_statistic = 0.0;
    bool chi_square_pass = true;
    bool serial_applicable = false;
    double serial_correlation = 0.0;
    bool serial_pass = true;
    bool overall_pass = true;
};

RandomnessVerdict assess_randomness(std::span<const uint8_t> bits, double alpha = 0.01);

}  // namespace sqot
