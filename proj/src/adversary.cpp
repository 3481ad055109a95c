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

#include "sqot/adversary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqot {

BitString bob_guess_before_opening(const CipherState &cipher, RandomSource &rng) {
    const size_t k = cipher.qubits.size() * 2 / 3;
    BitString out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        out.push_back(measure_computational(cipher.qubits[i], rng));
    }
    return out;
}

DensityMatrix2 direction_mixture(uint8_t m, uint64_t s, unsigned n) {
    const std::pair<QubitState, double> ensemble[] = {
        {encode_bit(m, s, 0, n), 0.5},
        {encode_bit(m, s, 1, n), 0.5},
    };
    return density_of_ensemble(ensemble);
}

QubitState helstrom_measurement_vector(uint64_t s, unsigned n) {
    DensityMatrix2 gap = direction_mixture(0, s, n) - direction_mixture(1, s, n);
    if (std::abs(gap.xx) + std::abs(gap.xy) + std::abs(gap.yy) < 1e-14) {
        return QubitState::zero();
    }
    return eigen_symmetric(gap).top_vector;
}

uint8_t measure_along(const QubitState &state, const QubitState &v, RandomSource &rng) {
    QubitState perp{-v.amp1, v.amp0};
    return measure_computational({inner(v, state), inner(perp, state)}, rng);
}

uint8_t helstrom_guess(const QubitState &qubit, uint64_t s, unsigned n, RandomSource &rng) {
    return measure_along(qubit, helstrom_measurement_vector(s, n), rng);
}

BitString bob_helstrom_after_opening(const CipherState &cipher, const OpeningMessage &opening, RandomSource &rng) {
    if (opening.key.s.size() != cipher.qubits.size()) {
        throw ProtocolViolation("helstrom: key length differs from cipher length");
    }
    const size_t k = cipher.qubits.size() * 2 / 3;
    BitString out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        out.push_back(helstrom_guess(cipher.qubits[i], opening.key.s[i], opening.n, rng));
    }
    return out;
}

QubitState cheating_factor(uint8_t m, uint64_t s, unsigned n) {
    DensityMatrix2 sum = projector(encode_bit(m, s, 0, n)) + projector(encode_bit(m, s, 1, n));
    return eigen_symmetric(sum).top_vector;
}

CheatingAliceState build_cheating_state(const BitString &message, const SecretKey &key, const SessionParams &params) {
    params.validate();
    if (message.size() != params.k) {
        throw std::invalid_argument("cheating alice: message must have k bits");
    }
    key.validate(params.register_size());
    BitString digest = params.hash(message);
    CheatingAliceState out{{}, message, key};
    out.qubits.reserve(params.register_size());
    for (size_t i = 0; i < params.register_size(); ++i) {
        uint8_t bit = i < params.k ? message[i] : digest[i - params.k];
        out.qubits.push_back(cheating_factor(bit, key.s[i], key.n));
    }
    return out;
}

double cheating_success_probability(const CheatingAliceState &state, const SessionParams &params) {
    BitString digest = params.hash(state.message);
    double plus = 1.0, minus = 1.0;
    for (size_t i = 0; i < state.qubits.size(); ++i) {
        uint8_t bit = i < params.k ? state.message[i] : digest[i - params.k];
        double op = inner(encode_bit(bit, state.key.s[i], 0, state.key.n), state.qubits[i]);
        double om = inner(encode_bit(bit, state.key.s[i], 1, state.key.n), state.qubits[i]);
        plus *= op * op;
        minus *= om * om;
    }
    return 0.5 * (plus + minus);
}

bool is_critical_angle(uint64_t s, unsigned n) {
    if (n < 1 || n > max_security_parameter) {
        throw std::out_of_range("is_critical_angle: unsupported n");
    }
    // s theta_n / pi = s / 2^(n-1); reduce mod 1 and compare against 1/8, 3/8.
    const uint64_t half_period = uint64_t{1} << (n - 1);
    const uint64_t r = s % half_period;
    return 8 * r >= half_period && 8 * r <= 3 * half_period;
}

CriticalAngleCount count_critical_angles(const SecretKey &key) {
    key.validate();
    CriticalAngleCount c{0, key.s.size()};
    for (uint64_t s : key.s) {
        c.l += is_critical_angle(s, key.n) ? 1 : 0;
    }
    return c;
}

double obliviousness_bound(size_t l) {
    const double c = std::cos(std::numbers::pi / 8);
    return 0.5 * (1.0 + std::pow(c * c, static_cast<double>(l)));
}

LStatistics summarize_l_counts(size_t k, std::span<const size_t> counts) {
    if (counts.size() < 2) {
        throw std::invalid_argument("summarize_l_counts: need at least two samples");
    }
    LStatistics st;
    st.k = k;
    st.samples = counts.size();
    const double root = std::sqrt(static_cast<double>(k));
    st.interval_low = (static_cast<double>(k) - 3.0 * root) / 4.0;
    st.interval_high = (static_cast<double>(k) + 3.0 * root) / 4.0;
    double sum = 0.0;
    size_t inside = 0;
    for (size_t c : counts) {
        double l = static_cast<double>(c);
        sum += l;
        if (l >= st.interval_low && l <= st.interval_high) {
            ++inside;
        }
    }
    const double count = static_cast<double>(counts.size());
    st.mean = sum / count;
    double ss = 0.0;
    for (size_t c : counts) {
        double d = static_cast<double>(c) - st.mean;
        ss += d * d;
    }
    st.variance = ss / (count - 1.0);
    st.in_interval_fraction = static_cast<double>(inside) / count;
    return st;
}

LStatistics l_distribution_check(size_t k, size_t samples, unsigned n, RandomSource &rng) {
    if (samples < 1000) {
        throw std::invalid_argument("l_distribution_check: need at least 1000 samples");
    }
    if (k == 0) {
        throw std::invalid_argument("l_distribution_check: k must be positive");
    }
    std::vector<size_t> counts;
    counts.reserve(samples);
    for (size_t i = 0; i < samples; ++i) {
        counts.push_back(count_critical_angles(sample_key(k, n, rng)).l);
    }
    return summarize_l_counts(k, counts);
}

}  // namespace sqot
