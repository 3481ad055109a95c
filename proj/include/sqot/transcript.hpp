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
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "sqot/protocol.hpp"

namespace sqot {

inline constexpr int transcript_schema_version = 1;

/// One simulated session, as written to the per-session audit file.
///
/// Layout (JSON object, keys in this order):
///   schema_version  integer
///   protocol        "bit-string-ot" | "single-bit-ot" | "pubkey"
///   trial_index     integer
///   trial_seed      integer (64-bit)
///   params          {"k", "n", "alpha", "hash": {"k", "rows": [hex...], "offset": hex}}
///                   (hash is absent for pubkey sessions)
///   cipher          [[amp0, amp1], ...] with 17 significant digits
///   opening         {"n", "key": [s_1, ...]}
///   outcome         {"status": "received", "message": "0101..."} or
///                   {"status": "rejected", "reason": "key-not-random" | "digest-mismatch"}
///                   (pubkey: {"status": "decrypted", "message": ...})
///   bit             recovered single-bit OT value, or null (single-bit-ot only)
struct SessionTranscript {
    std::string protocol = "bit-string-ot";
    uint64_t trial_index = 0;
    uint64_t trial_seed = 0;
    size_t k = 0;
    unsigned n = 1;
    double alpha = 0.01;
    std::optional<HashFunctionGF2> hash;
    CipherState cipher;
    OpeningMessage opening;
    std::optional<BobOutcome> outcome;
    std::optional<BitString> decrypted;
    std::optional<uint8_t> bit;
};

/// "%.17g" formatting.
std::string format_amplitude(double x);

nlohmann::ordered_json hash_to_json(const HashFunctionGF2 &h);
HashFunctionGF2 hash_from_json(const nlohmann::json &j);

nlohmann::ordered_json opening_to_json(const OpeningMessage &opening);
OpeningMessage opening_from_json(const nlohmann::json &j);

std::string write_transcript(const SessionTranscript &t);
/// Throws std::invalid_argument on schema mismatch or malformed content.
SessionTranscript read_transcript(std::string_view text);

}  // namespace sqot
