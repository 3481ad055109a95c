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
#include <numbers>

#include "gtest/gtest.h"
#include "sqot/protocol.hpp"
#include "sqot/randomness.hpp"

using namespace sqot;

namespace {

SessionParams fixed_params(size_t k = 8, unsigned n = 3) {
    RandomSource rng(1000 + k);
    return agree_session(k, n, rng);
}

// A 12-entry n = 3 key that passes the battery (checked in a test below).
SecretKey fixed_key() {
    return SecretKey{{6, 0, 3, 7, 0, 5, 1, 0, 1, 6, 3, 1}, 3};
}

}  // namespace

TEST(session, validation) {
    RandomSource rng(1);
    EXPECT_THROW(agree_session(7, 4, rng), std::invalid_argument);
    EXPECT_THROW(agree_session(6, 4, rng), std::invalid_argument);
    EXPECT_THROW(agree_session(8, 0, rng), std::invalid_argument);
    EXPECT_THROW(agree_session(8, 61, rng), std::invalid_argument);
    EXPECT_THROW(agree_session(8, 4, rng, 0.0), std::invalid_argument);
    auto p = agree_session(8, 4, rng);
    EXPECT_EQ(p.register_size(), 12u);
    EXPECT_DOUBLE_EQ(p.theta_n(), std::numbers::pi / 8);
    p.hash = sample_hash(10, rng);
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(prepare_cipher, zero_key_encodes_basis_states) {
    auto params = fixed_params();
    BitString m = parse_bits("10110010");
    auto cipher = prepare_cipher(m, SecretKey{std::vector<uint64_t>(12, 0), 3}, 0, params);
    ASSERT_EQ(cipher.qubits.size(), 12u);
    BitString full = m;
    auto d = params.hash(m);
    full.insert(full.end(), d.begin(), d.end());
    for (size_t i = 0; i < 12; ++i) {
        EXPECT_EQ(cipher.qubits[i], full[i] ? QubitState::one() : QubitState::zero());
    }
}

TEST(prepare_cipher, matches_encode_bit_per_position) {
    auto params = fixed_params();
    BitString m = parse_bits("01100111");
    auto key = fixed_key();
    for (uint8_t a : {0, 1}) {
        auto cipher = prepare_cipher(m, key, a, params);
        BitString full = m;
        auto d = params.hash(m);
        full.insert(full.end(), d.begin(), d.end());
        for (size_t i = 0; i < 12; ++i) {
            EXPECT_EQ(cipher.qubits[i], encode_bit(full[i], key.s[i], a, 3));
        }
    }
}

TEST(prepare_cipher, rejects_inconsistent_inputs) {
    auto params = fixed_params();
    EXPECT_THROW(prepare_cipher(BitString(7), fixed_key(), 0, params), std::invalid_argument);
    EXPECT_THROW(prepare_cipher(BitString(8), SecretKey{std::vector<uint64_t>(11, 0), 3}, 0, params),
                 std::invalid_argument);
    EXPECT_THROW(prepare_cipher(BitString(8), SecretKey{std::vector<uint64_t>(12, 0), 4}, 0, params),
                 std::invalid_argument);
    EXPECT_THROW(prepare_cipher(BitString(8), SecretKey{std::vector<uint64_t>(12, 8), 3}, 0, params),
                 std::invalid_argument);
}

TEST(alice_transfer, golden_snapshot) {
    RandomSource rng(42);
    auto params = agree_session(8, 3, rng);
    EXPECT_EQ(params.hash.rows_hex(), (std::vector<std::string>{"ea", "1f", "88", "2a"}));
    EXPECT_EQ(params.hash.offset_hex(), "d");
    auto t = alice_transfer(parse_bits("10110010"), params, rng);
    EXPECT_EQ(t.record.direction, 1);
    EXPECT_EQ(t.record.key.s, fixed_key().s);
    const std::pair<double, double> expected[] = {
        {0.70710678118654757, -0.70710678118654746}, {1, 0},
        {0.92387953251128674, 0.38268343236508978},  {0.38268343236508984, -0.92387953251128674},
        {1, 0},                                      {-0.38268343236508973, -0.92387953251128674},
        {0.38268343236508984, 0.92387953251128674},  {1, 0},
        {0.92387953251128674, -0.38268343236508978}, {0.70710678118654757, -0.70710678118654746},
        {0.92387953251128674, 0.38268343236508978},  {0.38268343236508984, 0.92387953251128674},
    };
    ASSERT_EQ(t.cipher.qubits.size(), 12u);
    for (size_t i = 0; i < 12; ++i) {
        EXPECT_EQ(t.cipher.qubits[i].amp0, expected[i].first) << i;
        EXPECT_EQ(t.cipher.qubits[i].amp1, expected[i].second) << i;
    }
}

TEST(alice_transfer, keys_pass_the_public_check) {
    RandomSource rng(3);
    auto params = agree_session(16, 4, rng);
    for (int t = 0; t < 200; ++t) {
        auto tr = alice_transfer(BitString(16, 0), params, rng);
        EXPECT_TRUE(assess_randomness(key_to_bits(tr.record.key), params.alpha).overall_pass);
    }
    EXPECT_TRUE(assess_randomness(key_to_bits(fixed_key())).overall_pass);
}

TEST(alice_open, reveals_key_only) {
    AliceRecord r0{0, fixed_key(), parse_bits("10110010"), parse_bits("0000")};
    AliceRecord r1 = r0;
    r1.direction = 1;
    EXPECT_EQ(alice_open(r0), alice_open(r1));
    EXPECT_EQ(alice_open(r0).key.s, fixed_key().s);
    EXPECT_EQ(alice_open(r0).n, 3u);
}

TEST(bob_open, opposite_direction_recovers_message_deterministically) {
    RandomSource rng(8);
    for (unsigned n : {1u, 3u, 4u, 8u}) {
        auto params = agree_session(16, n, rng);
        for (int t = 0; t < 50; ++t) {
            BitString m(16);
            for (auto &b : m) {
                b = rng.bit();
            }
            auto tr = alice_transfer(m, params, rng);
            auto out = bob_open_with_direction(tr.cipher, alice_open(tr.record), params,
                                               static_cast<uint8_t>(1 - tr.record.direction), rng);
            ASSERT_TRUE(is_received(out));
            EXPECT_EQ(std::get<Received>(out).message, m);
        }
    }
}

TEST(bob_measure, same_direction_follows_cos_squared) {
    // With a' = a the qubit sits at m pi + 2 (-1)^a s theta_n, so Bob reads m
    // with probability cos^2(s theta_n).
    RandomSource rng(9);
    const unsigned n = 3;
    const int trials = 20000;
    for (uint64_t s = 0; s < 8; ++s) {
        const double p = std::pow(std::cos(s * std::numbers::pi / 4), 2);
        const double sigma = std::sqrt(p * (1 - p) / trials);
        for (uint8_t a : {0, 1}) {
            int agree = 0;
            for (int t = 0; t < trials; ++t) {
                QubitState q = encode_bit(1, s, a, n);
                CipherState c{{q}};
                agree += bob_measure(c, SecretKey{{s}, n}, a, rng)[0] == 1;
            }
            EXPECT_NEAR(static_cast<double>(agree) / trials, p, 3 * sigma + 1e-9) << "s=" << s;
        }
    }
}

TEST(bob_open, all_zero_key_is_rejected_as_not_random) {
    auto params = fixed_params();
    SecretKey zero{std::vector<uint64_t>(12, 0), 3};
    auto cipher = prepare_cipher(parse_bits("10110010"), zero, 0, params);
    RandomSource rng(1);
    auto out = bob_open(cipher, OpeningMessage{zero, 3}, params, rng);
    ASSERT_FALSE(is_received(out));
    EXPECT_EQ(std::get<Rejected>(out).reason, RejectReason::key_not_random);
    EXPECT_EQ(to_string(RejectReason::key_not_random), "key-not-random");
    EXPECT_EQ(to_string(RejectReason::digest_mismatch), "digest-mismatch");
}

TEST(bob_open, length_mismatch_is_a_protocol_violation) {
    auto params = fixed_params();
    RandomSource rng(2);
    auto tr = alice_transfer(BitString(8, 1), params, rng);
    auto opening = alice_open(tr.record);
    CipherState shorter = tr.cipher;
    shorter.qubits.pop_back();
    EXPECT_THROW(bob_open(shorter, opening, params, rng), ProtocolViolation);
    OpeningMessage short_key = opening;
    short_key.key.s.pop_back();
    EXPECT_THROW(bob_open(tr.cipher, short_key, params, rng), ProtocolViolation);
    OpeningMessage wrong_n = opening;
    wrong_n.n = 4;
    EXPECT_THROW(bob_open(tr.cipher, wrong_n, params, rng), ProtocolViolation);
    OpeningMessage out_of_range = opening;
    out_of_range.key.s[0] = 8;
    EXPECT_THROW(bob_open(tr.cipher, out_of_range, params, rng), ProtocolViolation);
}

TEST(bob_open, honest_sessions_only_fail_on_the_digest) {
    RandomSource rng(10);
    auto params = agree_session(8, 3, rng);
    for (int t = 0; t < 2000; ++t) {
        BitString m(8);
        for (auto &b : m) {
            b = rng.bit();
        }
        auto tr = alice_transfer(m, params, rng);
        auto out = bob_open(tr.cipher, alice_open(tr.record), params, rng);
        if (is_received(out)) {
            EXPECT_EQ(std::get<Received>(out).message.size(), 8u);
        } else {
            EXPECT_EQ(std::get<Rejected>(out).reason, RejectReason::digest_mismatch);
        }
    }
}

TEST(single_bit_ot, message_parity_encodes_the_bit) {
    RandomSource rng(11);
    auto params = agree_session(16, 4, rng);
    for (int t = 0; t < 10000; ++t) {
        uint8_t b = rng.bit();
        auto tr = single_bit_ot_alice(b, params, rng);
        ASSERT_EQ(tr.message.size(), 16u);
        EXPECT_EQ(parity(tr.message), b);
        EXPECT_EQ(tr.record.message, tr.message);
    }
}

TEST(single_bit_ot, golden_message) {
    RandomSource rng(7);
    auto params = agree_session(16, 4, rng);
    auto tr = single_bit_ot_alice(1, params, rng);
    EXPECT_EQ(format_bits(tr.message), "1100101110111101");
}

TEST(single_bit_ot, bob_reads_parity) {
    EXPECT_EQ(single_bit_ot_bob(Received{parse_bits("10110010")}), std::optional<uint8_t>(0));
    EXPECT_EQ(single_bit_ot_bob(Received{parse_bits("10110011")}), std::optional<uint8_t>(1));
    EXPECT_EQ(single_bit_ot_bob(Rejected{RejectReason::digest_mismatch}), std::nullopt);
}
