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

#include "sqot/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqot {

namespace {

void check_n(unsigned n) {
    if (n < 1 || n > max_security_parameter) {
        throw std::out_of_range("security parameter n must be in [1, " +
                                std::to_string(max_security_parameter) + "]");
    }
}

// Numerator of angle / pi over denominator 2^(n-1).
int64_t pi_numerator(const Angle &a, unsigned log2_den) {
    int64_t base = static_cast<int64_t>(a.s) * (a.sign < 0 ? -1 : 1);
    // Only half_turns mod 4 matters once the result is reduced mod 2^(log2_den+2).
    int64_t turns = ((a.half_turns % 4) + 4) % 4;
    return base + turns * (int64_t{1} << log2_den);
}

}  // namespace

double QubitState::norm() const {
    return std::hypot(amp0, amp1);
}

double inner(const QubitState &a, const QubitState &b) {
    return a.amp0 * b.amp0 + a.amp1 * b.amp1;
}

double theta(unsigned n) {
    check_n(n);
    return std::ldexp(std::numbers::pi, -static_cast<int>(n - 1));
}

std::pair<double, double> cos_sin_pi_fraction(int64_t numerator, unsigned log2_denominator) {
    // Reduce to [0, 2 * 2^d), i.e. one full turn.
    const uint64_t period = uint64_t{1} << (log2_denominator + 1);
    uint64_t r = static_cast<uint64_t>(numerator) & (period - 1);
    if (log2_denominator >= 1) {
        const uint64_t quarter = uint64_t{1} << (log2_denominator - 1);
        if (r % quarter == 0) {
            switch (r / quarter) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                case 3: return {0.0, -1.0};
            }
        }
    } else if (r == 0) {
        return {1.0, 0.0};
    } else {
        return {-1.0, 0.0};
    }
    // Evaluate on (-pi, pi] for symmetric rounding.
    int64_t centered = static_cast<int64_t>(r);
    if (r > period / 2) {
        centered -= static_cast<int64_t>(period);
    }
    double x = std::numbers::pi * std::ldexp(static_cast<double>(centered),
                                             -static_cast<int>(log2_denominator));
    return {std::cos(x), std::sin(x)};
}

double Angle::radians() const {
    return (sign < 0 ? -1.0 : 1.0) * static_cast<double>(s) * theta(n) +
           static_cast<double>(half_turns) * std::numbers::pi;
}

std::pair<double, double> Angle::cos_sin() const {
    check_n(n);
    return cos_sin_pi_fraction(pi_numerator(*this, n - 1), n - 1);
}

std::pair<double, double> Angle::half_cos_sin() const {
    check_n(n);
    return cos_sin_pi_fraction(pi_numerator(*this, n - 1), n);
}

namespace {

QubitState apply_rotation(const QubitState &st, double c, double s) {
    return {c * st.amp0 - s * st.amp1, s * st.amp0 + c * st.amp1};
}

}  // namespace

QubitState rotate(const QubitState &state, const Angle &angle) {
    auto [c, s] = angle.half_cos_sin();
    return apply_rotation(state, c, s);
}

QubitState rotate(const QubitState &state, double radians) {
    return apply_rotation(state, std::cos(radians / 2), std::sin(radians / 2));
}

QubitState encode_bit(uint8_t m, uint64_t s, uint8_t direction, unsigned n) {
    check_n(n);
    if (s >= (uint64_t{1} << n)) {
        throw std::out_of_range("encode_bit: key entry " + std::to_string(s) +
                                " out of range for n = " + std::to_string(n));
    }
    Angle angle{s, n, direction ? -1 : 1, m ? 1 : 0};
    return rotate(QubitState::zero(), angle);
}

uint8_t measure_computational(const QubitState &state, RandomSource &rng) {
    double p0 = state.amp0 * state.amp0;
    if (p0 < 1e-12) {
        p0 = 0.0;
    } else if (p0 > 1.0 - 1e-12) {
        p0 = 1.0;
    }
    return rng.uniform01() < p0 ? 0 : 1;
}

double DensityMatrix2::distance(const DensityMatrix2 &o) const {
    return std::max({std::abs(xx - o.xx), std::abs(xy - o.xy), std::abs(yy - o.yy)});
}

DensityMatrix2 projector(const QubitState &state) {
    return {state.amp0 * state.amp0, state.amp0 * state.amp1, state.amp1 * state.amp1};
}

DensityMatrix2 density_of_ensemble(std::span<const std::pair<QubitState, double>> ensemble) {
    DensityMatrix2 rho;
    double total = 0.0;
    for (const auto &[state, p] : ensemble) {
        if (p < 0.0) {
            throw std::invalid_argument("density_of_ensemble: negative weight");
        }
        rho = rho + projector(state) * p;
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("density_of_ensemble: weights sum to " + std::to_string(total));
    }
    return rho;
}

SymmetricEigen2 eigen_symmetric(const DensityMatrix2 &m) {
    double mean = 0.5 * (m.xx + m.yy);
    double half_gap = 0.5 * (m.xx - m.yy);
    double radius = std::hypot(half_gap, m.xy);
    double phi = 0.5 * std::atan2(m.xy, half_gap);
    return {mean + radius, mean - radius, {std::cos(phi), std::sin(phi)}};
}

double trace_norm(const DensityMatrix2 &m) {
    auto e = eigen_symmetric(m);
    return std::abs(e.lambda_max) + std::abs(e.lambda_min);
}

double helstrom_probability(uint64_t s, unsigned n) {
    check_n(n);
    if (s >= (uint64_t{1} << n)) {
        throw std::out_of_range("helstrom_probability: s out of range");
    }
    double c = Angle{s, n, 1, 0}.cos_sin().first;
    return 0.5 * (1.0 + std::abs(c));
}

}  // namespace sqot
