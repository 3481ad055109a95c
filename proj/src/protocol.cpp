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

#include "sqot/protocol.hpp"

#include <algorithm>

#include "sqot/randomness.hpp"

namespace sqot {

double SessionParams::theta_n() const {
    return theta(n);
}

void SessionParams::validate() const {
    if (k < min_message_bits || k % 2 != 0) {
        throw std::invalid_argument("session: k must be even and >= 8, got " + std::to_string(k));
    }
    if (n < 1 || n > max_security_parameter) {
        throw std::invalid_argument("session: unsupported security parameter " + std::to_string(n));
    }
    if (hash.input_bits() != k) {
        throw std::invalid_argument("session: hash input length does not match k");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("session: alpha must be in (0, 1)");
    }
}

SessionParams agree_session(size_t k, unsigned n, RandomSource &rng, double alpha) {
    if (k < min_message_bits || k % 2 != 0) {
        throw std::invalid_argument("session: k must be even and >= 8, got " + std::to_string(k));
    }
    SessionParams params{k, n, sample_hash(k, rng), alpha};
    params.validate();
    return params;
}

std::string to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::key_not_random: return "key-not-random";
        case RejectReason::digest_mismatch: return "digest-mismatch";
    }
    return "unknown";
}

CipherState prepare_cipher(const BitString &message, const SecretKey &key, uint8_t direction,
                           const SessionParams &params) {
    params.validate();
    if (message.size() != params.k) {
        throw std::invalid_argument("alice: message must have k = " + std::to_string(params.k) + " bits");
    }
    if (key.n != params.n) {
        throw std::invalid_argument("alice: key security parameter differs from the session's");
    }
    key.validate(params.register_size());
    BitString digest = params.hash(message);
    CipherState cipher;
    cipher.qubits.reserve(params.register_size());
    for (size_t i = 0; i < params.k; ++i) {
        cipher.qubits.push_back(encode_bit(message[i], key.s[i], direction, params.n));
    }
    for (size_t i = 0; i < digest.size(); ++i) {
        cipher.qubits.push_back(encode_bit(digest[i], key.s[params.k + i], direction, params.n));
    }
    return cipher;
}

SecretKey sample_session_key(const SessionParams &params, RandomSource &rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        SecretKey key = sample_key(params.register_size(), params.n, rng);
        if (assess_randomness(key_to_bits(key), params.alpha).overall_pass) {
            return key;
        }
    }
    throw std::runtime_error("alice: no key passed the randomness check in 1000 draws");
}

Transfer alice_transfer(const BitString &message, const SessionParams &params, RandomSource &rng) {
    params.validate();
    if (message.size() != params.k) {
        throw std::invalid_argument("alice: message must have k = " + std::to_string(params.k) + " bits");
    }
    uint8_t direction = rng.bit();
    SecretKey key = sample_session_key(params, rng);
    CipherState cipher = prepare_cipher(message, key, direction, params);
    return {std::move(cipher), AliceRecord{direction, std::move(key), message, params.hash(message)}};
}

OpeningMessage alice_open(const AliceRecord &record) {
    return {record.key, record.key.n};
}

Angle bob_rotation(uint64_t s, unsigned n, uint8_t bob_direction) {
    return Angle{s, n, bob_direction ? -1 : 1, 0};
}

BitString bob_measure(const CipherState &cipher, const SecretKey &key, uint8_t bob_direction, RandomSource &rng) {
    if (cipher.qubits.size() != key.s.size()) {
        throw ProtocolViolation("bob: cipher has " + std::to_string(cipher.qubits.size()) + " qubits but key has " +
                                std::to_string(key.s.size()) + " entries");
    }
    BitString out;
    out.reserve(cipher.qubits.size());
    for (size_t i = 0; i < cipher.qubits.size(); ++i) {
        QubitState rotated = rotate(cipher.qubits[i], bob_rotation(key.s[i], key.n, bob_direction));
        out.push_back(measure_computational(rotated, rng));
    }
    return out;
}

namespace {

void check_opening(const CipherState &cipher, const OpeningMessage &opening, const SessionParams &params) {
    params.validate();
    if (cipher.qubits.size() != params.register_size()) {
        throw ProtocolViolation("bob: expected " + std::to_string(params.register_size()) + " qubits, got " +
                                std::to_string(cipher.qubits.size()));
    }
    if (opening.n != params.n || opening.key.n != params.n) {
        throw ProtocolViolation("bob: opening security parameter differs from the session's");
    }
    if (opening.key.s.size() != params.register_size()) {
        throw ProtocolViolation("bob: opening key has " + std::to_string(opening.key.s.size()) + " entries, expected " +
                                std::to_string(params.register_size()));
    }
    try {
        opening.key.validate();
    } catch (const std::invalid_argument &e) {
        throw ProtocolViolation(std::string("bob: malformed key: ") + e.what());
    }
}

BobOutcome decode(const CipherState &cipher, const OpeningMessage &opening, const SessionParams &params,
                  uint8_t bob_direction, RandomSource &rng) {
    BitString measured = bob_measure(cipher, opening.key, bob_direction, rng);
    BitString message(measured.begin(), measured.begin() + static_cast<std::ptrdiff_t>(params.k));
    BitString digest(measured.begin() + static_cast<std::ptrdiff_t>(params.k), measured.end());
    if (params.hash(message) == digest) {
        return Received{std::move(message)};
    }
    return Rejected{RejectReason::digest_mismatch};
}

bool key_looks_random(const OpeningMessage &opening, const SessionParams &params) {
    return assess_randomness(key_to_bits(opening.key), params.alpha).overall_pass;
}

}  // namespace

BobOutcome bob_open(const CipherState &cipher, const OpeningMessage &opening, const SessionParams &params,
                    RandomSource &rng) {
    check_opening(cipher, opening, params);
    if (!key_looks_random(opening, params)) {
        return Rejected{RejectReason::key_not_random};
    }
    uint8_t bob_direction = rng.bit();
    return decode(cipher, opening, params, bob_direction, rng);
}

BobOutcome bob_open_with_direction(const CipherState &cipher, const OpeningMessage &opening,
                                   const SessionParams &params, uint8_t bob_direction, RandomSource &rng) {
    check_opening(cipher, opening, params);
    if (!key_looks_random(opening, params)) {
        return Rejected{RejectReason::key_not_random};
    }
    return decode(cipher, opening, params, bob_direction, rng);
}

BitTransfer single_bit_ot_alice(uint8_t b, const SessionParams &params, RandomSource &rng) {
    params.validate();
    BitString message(params.k);
    for (size_t i = 0; i + 1 < params.k; ++i) {
        message[i] = rng.bit();
    }
    message.back() = 0;
    message.back() = static_cast<uint8_t>((b & 1) ^ parity(message));
    Transfer t = alice_transfer(message, params, rng);
    return {std::move(message), std::move(t.cipher), std::move(t.record)};
}

std::optional<uint8_t> single_bit_ot_bob(const BobOutcome &outcome) {
    if (const auto *r = std::get_if<Received>(&outcome)) {
        return parity(r->message);
    }
    return std::nullopt;
}

}  // namespace sqot
