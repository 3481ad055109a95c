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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "sqot/key.hpp"
#include "sqot/randomness.hpp"

using namespace sqot;

namespace {

BitString random_bits(size_t count, RandomSource &rng) {
    BitString b(count);
    for (auto &x : b) {
        x = rng.bit();
    }
    return b;
}

}  // namespace

TEST(key_to_bits, examples) {
    SecretKey key{{5, 2, 7}, 3};
    EXPECT_EQ(format_bits(key_to_bits(key)), "101010111");
    EXPECT_EQ(format_bits(key_to_bits(SecretKey{{1}, 1})), "1");
    EXPECT_EQ(format_bits(key_to_bits(SecretKey{{1, 0}, 4})), "00010000");
    EXPECT_THROW(bits_to_key(parse_bits("1010"), 3), std::invalid_argument);
}

TEST(key_to_bits, round_trip) {
    RandomSource rng(1);
    for (unsigned n = 1; n <= 12; ++n) {
        auto key = sample_key(30, n, rng);
        auto back = bits_to_key(key_to_bits(key), n);
        EXPECT_EQ(back.s, key.s);
        EXPECT_EQ(back.n, n);
    }
}

TEST(chi_square, balanced_input_scores_zero) {
    BitString bits;
    for (int rep = 0; rep < 10; ++rep) {
        for (int v = 0; v < 4; ++v) {
            bits.push_back(v >> 1);
            bits.push_back(v & 1);
        }
    }
    auto r = chi_square_test(bits, 2, 0.01);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.degrees_of_freedom, 3u);
    EXPECT_TRUE(r.pass);
}

TEST(chi_square, all_zero_input) {
    // 200 symbols, 50 expected per bin: (200-50)^2/50 + 3*50 = 600.
    auto r = chi_square_test(BitString(400, 0), 2, 0.01);
    EXPECT_DOUBLE_EQ(r.statistic, 600.0);
    EXPECT_NEAR(r.critical_value, 11.3449, 1e-3);
    EXPECT_FALSE(r.pass);
}

TEST(chi_square, critical_values) {
    EXPECT_NEAR(chi_square_test(BitString(80, 0), 1, 0.05).critical_value, 3.8415, 1e-3);
    EXPECT_NEAR(chi_square_test(BitString(400, 0), 4, 0.01).critical_value, 30.5779, 1e-3);
}

TEST(chi_square, too_few_symbols_throws) {
    EXPECT_THROW(chi_square_test(BitString(8, 0), 2, 0.01), std::invalid_argument);
    EXPECT_THROW(chi_square_test(BitString(100, 0), 0, 0.01), std::invalid_argument);
}

TEST(chi_square, width_selection) {
    EXPECT_EQ(chi_square_width_for(9), 0u);
    EXPECT_EQ(chi_square_width_for(10), 1u);
    EXPECT_EQ(chi_square_width_for(40), 2u);
    EXPECT_EQ(chi_square_width_for(120), 3u);
    EXPECT_EQ(chi_square_width_for(320), 4u);
    EXPECT_EQ(chi_square_width_for(100000), 4u);
}

TEST(chi_square, uniform_input_passes_at_the_nominal_rate) {
    RandomSource rng(2);
    int passes = 0;
    for (int t = 0; t < 1000; ++t) {
        passes += chi_square_test(random_bits(400, rng), 2, 0.01).pass;
    }
    EXPECT_GE(passes, 980);
}

TEST(serial_correlation, alternating_input_is_anticorrelated) {
    BitString bits;
    for (int i = 0; i < 200; ++i) {
        bits.push_back(i % 2);
    }
    auto r = serial_correlation_test(bits, 0.01);
    EXPECT_NEAR(r.coefficient, -1.0, 1e-12);
    EXPECT_NEAR(r.threshold, 2.5758 / std::sqrt(200.0), 1e-4);
    EXPECT_FALSE(r.pass);
}

TEST(serial_correlation, constant_input_is_degenerate) {
    auto r = serial_correlation_test(BitString(200, 1), 0.01);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.coefficient, 0.0);
    EXPECT_FALSE(r.pass);
}

TEST(serial_correlation, short_input_throws) {
    EXPECT_THROW(serial_correlation_test(BitString(99, 0), 0.01), std::invalid_argument);
}

TEST(serial_correlation, matches_pearson_oracle) {
    RandomSource rng(3);
    auto bits = random_bits(500, rng);
    const size_t m = bits.size() - 1;
    double mx = 0, my = 0;
    for (size_t i = 0; i < m; ++i) {
        mx += bits[i];
        my += bits[i + 1];
    }
    mx /= m;
    my /= m;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < m; ++i) {
        sxy += (bits[i] - mx) * (bits[i + 1] - my);
        sxx += (bits[i] - mx) * (bits[i] - mx);
        syy += (bits[i + 1] - my) * (bits[i + 1] - my);
    }
    EXPECT_NEAR(serial_correlation_test(bits, 0.01).coefficient, sxy / std::sqrt(sxx * syy), 1e-12);
}

TEST(serial_correlation, uniform_input_passes_at_the_nominal_rate) {
    RandomSource rng(4);
    int passes = 0;
    for (int t = 0; t < 1000; ++t) {
        passes += serial_correlation_test(random_bits(400, rng), 0.01).pass;
    }
    EXPECT_GE(passes, 980);
}

TEST(assess_randomness, honest_keys_mostly_pass) {
    RandomSource rng(5);
    int passes = 0;
    for (int t = 0; t < 1000; ++t) {
        passes += assess_randomness(key_to_bits(sample_key(60, 4, rng))).overall_pass;
    }
    EXPECT_GE(passes, 960);
}

TEST(assess_randomness, all_zero_keys_always_fail) {
    for (size_t length : {12, 24, 60, 150}) {
        for (unsigned n : {3u, 4u, 8u}) {
            EXPECT_FALSE(assess_randomness(key_to_bits(SecretKey{std::vector<uint64_t>(length, 0), n})).overall_pass);
        }
    }
}

TEST(assess_randomness, verdict_is_conjunction_of_tests) {
    RandomSource rng(6);
    for (int t = 0; t < 300; ++t) {
        auto bits = random_bits(8 + rng.uniform_below(400), rng);
        auto v = assess_randomness(bits, 0.05);
        EXPECT_EQ(v.overall_pass, v.chi_square_pass && v.serial_pass);
        EXPECT_EQ(v.serial_applicable, bits.size() >= min_serial_correlation_bits);
        EXPECT_EQ(v.chi_square_width, chi_square_width_for(bits.size()));
        if (!v.chi_square_applicable) {
            EXPECT_TRUE(v.chi_square_pass);
        }
        if (!v.serial_applicable) {
            EXPECT_TRUE(v.serial_pass);
        }
    }
}
