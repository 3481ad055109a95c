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
#include <vector>

#include "sqot/bits.hpp"
#include "sqot/key.hpp"
#include "sqot/protocol.hpp"
#include "sqot/qubit.hpp"
#include "sqot/random.hpp"

namespace sqot {

// ---- Cheating Bob -------------------------------------------------------

/// Without key or direction: measure the k message qubits in the
/// computational basis. Nothing does better than 1/2 per bit.
BitString bob_guess_before_opening(const CipherState &cipher, RandomSource &rng);

/// rho_m(s): equal mixture of the two direction encodings of bit m.
DensityMatrix2 direction_mixture(uint8_t m, uint64_t s, unsigned n);

/// Unit vector whose projector is the "guess 0" Helstrom outcome for
/// rho_0(s) vs rho_1(s): the positive eigenvector of rho_0 - rho_1.
/// Falls back to |0> when the two mixtures coincide.
QubitState helstrom_measurement_vector(uint64_t s, unsigned n);

/// Projective measurement onto {|v>, |v_perp>}; returns 0 for |v>.
uint8_t measure_along(const QubitState &state, const QubitState &v, RandomSource &rng);

/// Helstrom guess of the bit encoded in one qubit with key entry s.
uint8_t helstrom_guess(const QubitState &qubit, uint64_t s, unsigned n, RandomSource &rng);

/// After the opening, Helstrom-measure each message qubit. Returns k bits.
/// Throws ProtocolViolation when the key length differs from the cipher's.
BitString bob_helstrom_after_opening(const CipherState &cipher, const OpeningMessage &opening, RandomSource &rng);

// ---- Cheating Alice -----------------------------------------------------

/// Product state Alice sends instead of an honest encoding, aiming for Bob to
/// decode `message` (and its digest) whatever direction he picks.
struct CheatingAliceState {
    std::vector<QubitState> qubits;
    BitString message;
    SecretKey key;

    CipherState as_cipher() const {
        return {qubits};
    }
};

/// Top eigenvector of P_+(m; s) + P_-(m; s). Per-qubit success
/// (1 + |cos(s theta_n)|) / 2 for either direction of Bob's rotation.
QubitState cheating_factor(uint8_t m, uint64_t s, unsigned n);

CheatingAliceState build_cheating_state(const BitString &message, const SecretKey &key, const SessionParams &params);

/// Exact probability that an honest Bob decodes message and digest from the
/// cheating state: 1/2 (prod |<m_i(s_i)_+|psi_i>|^2 + prod |<m_i(s_i)_-|psi_i>|^2).
double cheating_success_probability(const CheatingAliceState &state, const SessionParams &params);

struct CriticalAngleCount {
    size_t l = 0;
    size_t total = 0;
};

/// Whether s theta_n, reduced mod pi, lies in [pi/8, 3pi/8]. Exact integer
/// comparison; both endpoints included.
bool is_critical_angle(uint64_t s, unsigned n);

CriticalAngleCount count_critical_angles(const SecretKey &key);

/// 1/2 (1 + cos^(2l)(pi/8)).
double obliviousness_bound(size_t l);

struct LStatistics {
    size_t k = 0;
    size_t samples = 0;
    double mean = 0.0;
    /// Unbiased sample variance.
    double variance = 0.0;
    /// Fraction of samples with (k - 3 sqrt k)/4 <= l <= (k + 3 sqrt k)/4.
    double in_interval_fraction = 0.0;
    double interval_low = 0.0;
    double interval_high = 0.0;
};

/// Summary statistics of critical-angle counts for k-entry keys.
LStatistics summarize_l_counts(size_t k, std::span<const size_t> counts);

/// Critical-angle counts over `samples` uniformly random k-entry keys.
/// Throws std::invalid_argument for fewer than 1000 samples.
LStatistics l_distribution_check(size_t k, size_t samples, unsigned n, RandomSource &rng);

}  // namespace sqot
