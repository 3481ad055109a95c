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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sqot/bits.hpp"
#include "sqot/hashing.hpp"
#include "sqot/key.hpp"
#include "sqot/qubit.hpp"
#include "sqot/random.hpp"

namespace sqot {

/// Raised when a party receives messages inconsistent with the session.
class ProtocolViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr size_t min_message_bits = 8;

/// Parameters both parties agree on before the transferring phase.
struct SessionParams {
    size_t k = min_message_bits;
    unsigned n = 4;
    HashFunctionGF2 hash;
    /// Significance level of Bob's key check.
    double alpha = 0.01;

    double theta_n() const;
    /// 3k/2: message qubits followed by digest qubits.
    size_t register_size() const {
        return 3 * k / 2;
    }
    /// Throws std::invalid_argument unless k is even and >= 8, n is supported
    /// and the hash maps k bits to k/2 bits.
    void validate() const;
};

/// Samples the session hash and bundles the parameters.
SessionParams agree_session(size_t k, unsigned n, RandomSource &rng, double alpha = 0.01);

/// The 3k/2 qubits Alice sends: first k encode the message, last k/2 its digest.
struct CipherState {
    std::vector<QubitState> qubits;
    bool operator==(const CipherState &) const = default;
};

/// Alice's private session state. The direction bit never leaves this record.
struct AliceRecord {
    uint8_t direction = 0;
    SecretKey key;
    BitString message;
    BitString digest;
};

/// What Alice reveals in the opening phase.
struct OpeningMessage {
    SecretKey key;
    unsigned n = 1;
    bool operator==(const OpeningMessage &) const = default;
};

enum class RejectReason { key_not_random, digest_mismatch };
std::string to_string(RejectReason reason);

struct Received {
    BitString message;
    bool operator==(const Received &) const = default;
};
struct Rejected {
    RejectReason reason;
    bool operator==(const Rejected &) const = default;
};
using BobOutcome = std::variant<Received, Rejected>;

inline bool is_received(const BobOutcome &o) {
    return std::holds_alternative<Received>(o);
}

/// The transferring-phase state for a fixed key and direction. Pure.
CipherState prepare_cipher(const BitString &message, const SecretKey &key, uint8_t direction,
                           const SessionParams &params);

/// A uniformly random 3k/2-entry key, redrawn until it passes the public
/// randomness check Bob will apply. Throws std::runtime_error if no key
/// passes within 1000 draws.
SecretKey sample_session_key(const SessionParams &params, RandomSource &rng);

struct Transfer {
    CipherState cipher;
    AliceRecord record;
};

/// Draws the direction bit, then the key, and prepares the cipher.
Transfer alice_transfer(const BitString &message, const SessionParams &params, RandomSource &rng);

OpeningMessage alice_open(const AliceRecord &record);

/// Bob's decoding rotation R((-1)^a' s theta_n).
Angle bob_rotation(uint64_t s, unsigned n, uint8_t bob_direction);

/// Applies Bob's rotations for direction a' and measures all qubits.
BitString bob_measure(const CipherState &cipher, const SecretKey &key, uint8_t bob_direction, RandomSource &rng);

/// Opening phase on Bob's side: key check, then a uniformly drawn a', then
/// measurement and digest comparison.
BobOutcome bob_open(const CipherState &cipher, const OpeningMessage &opening, const SessionParams &params,
                    RandomSource &rng);

/// As bob_open with a' fixed by the caller.
BobOutcome bob_open_with_direction(const CipherState &cipher, const OpeningMessage &opening,
                                   const SessionParams &params, uint8_t bob_direction, RandomSource &rng);

struct BitTransfer {
    BitString message;
    CipherState cipher;
    AliceRecord record;
};

/// Single-bit OT, Alice's side: a uniform k-bit message with parity b, sent
/// through the bit-string protocol.
BitTransfer single_bit_ot_alice(uint8_t b, const SessionParams &params, RandomSource &rng);

/// Parity of the received message, or nothing when Bob rejected.
std::optional<uint8_t> single_bit_ot_bob(const BobOutcome &outcome);

}  // namespace sqot
