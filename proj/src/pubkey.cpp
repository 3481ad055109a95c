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

#include "sqot/pubkey.hpp"

#include <stdexcept>
#include <string>

namespace sqot {

PublicKey public_key_for(const SecretKey &secret) {
    secret.validate();
    PublicKey pub{{}, secret.n};
    pub.qubits.reserve(secret.s.size());
    for (uint64_t s : secret.s) {
        pub.qubits.push_back(rotate(QubitState::zero(), Angle{s, secret.n, 1, 0}));
    }
    return pub;
}

KeyPair keygen(size_t k, unsigned n, RandomSource &rng) {
    if (k == 0) {
        throw std::invalid_argument("keygen: k must be positive");
    }
    SecretKey secret = sample_key(k, n, rng);
    PublicKey pub = public_key_for(secret);
    return {std::move(secret), std::move(pub)};
}

CipherState encrypt(const BitString &m, PublicKey &&pub) {
    if (m.size() > pub.qubits.size()) {
        throw std::invalid_argument("encrypt: message of " + std::to_string(m.size()) + " bits exceeds key length " +
                                    std::to_string(pub.qubits.size()));
    }
    CipherState cipher{std::move(pub.qubits)};
    pub.qubits.clear();
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i]) {
            cipher.qubits[i] = rotate(cipher.qubits[i], Angle{0, 1, 1, 1});
        }
    }
    return cipher;
}

BitString decrypt(const CipherState &cipher, const SecretKey &secret, RandomSource &rng) {
    if (cipher.qubits.size() != secret.s.size()) {
        throw ProtocolViolation("decrypt: cipher has " + std::to_string(cipher.qubits.size()) +
                                " qubits but key has " + std::to_string(secret.s.size()) + " entries");
    }
    secret.validate();
    BitString out;
    out.reserve(cipher.qubits.size());
    for (size_t i = 0; i < cipher.qubits.size(); ++i) {
        QubitState undone = rotate(cipher.qubits[i], Angle{secret.s[i], secret.n, -1, 0});
        out.push_back(measure_computational(undone, rng));
    }
    return out;
}

}  // namespace sqot
