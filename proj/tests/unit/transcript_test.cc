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

#include "gtest/gtest.h"
#include "sqot/pubkey.hpp"
#include "sqot/transcript.hpp"

using namespace sqot;

namespace {

SessionTranscript sample_transcript(uint64_t seed) {
    RandomSource rng(seed);
    auto params = agree_session(8, 3, rng);
    auto tr = alice_transfer(parse_bits("10110010"), params, rng);
    SessionTranscript t;
    t.trial_index = 3;
    t.trial_seed = 18446744073709551557ull;
    t.k = 8;
    t.n = 3;
    t.alpha = params.alpha;
    t.hash = params.hash;
    t.cipher = tr.cipher;
    t.opening = alice_open(tr.record);
    t.outcome = bob_open(tr.cipher, t.opening, params, rng);
    return t;
}

}  // namespace

TEST(transcript, round_trip_is_bit_exact) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto t = sample_transcript(seed);
        auto text = write_transcript(t);
        auto back = read_transcript(text);
        EXPECT_EQ(back.protocol, t.protocol);
        EXPECT_EQ(back.trial_index, t.trial_index);
        EXPECT_EQ(back.trial_seed, t.trial_seed);
        EXPECT_EQ(back.k, t.k);
        EXPECT_EQ(back.n, t.n);
        EXPECT_EQ(back.alpha, t.alpha);
        EXPECT_EQ(back.hash, t.hash);
        EXPECT_EQ(back.cipher, t.cipher);
        EXPECT_EQ(back.opening, t.opening);
        EXPECT_EQ(back.outcome, t.outcome);
        EXPECT_EQ(write_transcript(back), text);
    }
}

TEST(transcript, golden_layout) {
    auto t = sample_transcript(42);
    auto j = nlohmann::ordered_json::parse(write_transcript(t));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "protocol", "trial_index", "trial_seed", "params",
                                              "cipher", "opening", "outcome"}));
    EXPECT_EQ(j["params"]["hash"]["rows"], nlohmann::ordered_json({"ea", "1f", "88", "2a"}));
    EXPECT_EQ(j["params"]["hash"]["offset"], "d");
    EXPECT_EQ(j["opening"]["key"], nlohmann::ordered_json({6, 0, 3, 7, 0, 5, 1, 0, 1, 6, 3, 1}));
}

TEST(transcript, bit_and_pubkey_variants) {
    auto t = sample_transcript(7);
    t.protocol = "single-bit-ot";
    t.bit = std::nullopt;
    auto j = nlohmann::json::parse(write_transcript(t));
    EXPECT_TRUE(j.contains("bit"));
    EXPECT_TRUE(j["bit"].is_null());
    t.bit = 1;
    EXPECT_EQ(read_transcript(write_transcript(t)).bit, std::optional<uint8_t>(1));

    RandomSource rng(1);
    auto pair = keygen(4, 3, rng);
    SessionTranscript p;
    p.protocol = "pubkey";
    p.k = 4;
    p.n = 3;
    p.cipher = encrypt(parse_bits("1011"), public_key_for(pair.secret));
    p.opening = {pair.secret, 3};
    p.decrypted = decrypt(p.cipher, pair.secret, rng);
    auto back = read_transcript(write_transcript(p));
    EXPECT_FALSE(back.hash.has_value());
    EXPECT_EQ(back.decrypted, p.decrypted);
    EXPECT_EQ(back.cipher, p.cipher);
}

TEST(transcript, amplitude_format) {
    EXPECT_EQ(format_amplitude(0.1), "0.10000000000000001");
    EXPECT_EQ(format_amplitude(1.0), "1");
    EXPECT_EQ(format_amplitude(-0.70710678118654746), "-0.70710678118654746");
}

TEST(transcript, rejects_bad_input) {
    auto j = nlohmann::json::parse(write_transcript(sample_transcript(1)));
    j["schema_version"] = 2;
    EXPECT_THROW(read_transcript(j.dump()), std::invalid_argument);
    EXPECT_THROW(read_transcript("{"), std::invalid_argument);
    EXPECT_THROW(read_transcript("{}"), std::invalid_argument);
}
