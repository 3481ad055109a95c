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

#include <vector>

#include "sqot/bits.hpp"
#include "sqot/key.hpp"
#include "sqot/protocol.hpp"
#include "sqot/qubit.hpp"
#include "sqot/random.hpp"

namespace sqot {

/// k qubits R(s_i theta_n)|0>.
struct PublicKey {
    std::vector<QubitState> qubits;
    unsigned n = 1;
};

struct KeyPair {
    SecretKey secret;
    PublicKey pub;
};

/// Public key for a given secret key.
PublicKey public_key_for(const SecretKey &secret);

/// Uniform secret key of length k and its public key. Throws
/// std::invalid_argument for k == 0 or unsupported n.
KeyPair keygen(size_t k, unsigned n, RandomSource &rng);

/// Rotates qubit i by m_i pi after right zero-padding m to the key length.
/// Consumes the public key; each key encrypts one message. Throws
/// std::invalid_argument when m is longer than the key.
CipherState encrypt(const BitString &m, PublicKey &&pub);

/// Undoes the key rotations and measures. Returns one bit per qubit.
/// Throws ProtocolViolation on length mismatch.
BitString decrypt(const CipherState &cipher, const SecretKey &secret, RandomSource &rng);

}  // namespace sqot
