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
#include <utility>

#include "sqot/random.hpp"

namespace sqot {

/// Real-amplitude single-qubit state amp0|0> + amp1|1>.
struct QubitState {
    double amp0 = 1.0;
    double amp1 = 0.0;

    static constexpr QubitState zero() {
        return {1.0, 0.0};
    }
    static constexpr QubitState one() {
        return {0.0, 1.0};
    }

    double norm() const;
    bool operator==(const QubitState &) const = default;
};

/// Inner product <a|b> (real amplitudes).
double inner(const QubitState &a, const QubitState &b);

/// Rotation angle sign * s * theta_n + half_turns * pi, theta_n = pi / 2^(n-1).
///
/// Kept symbolic: the trig values are computed from the exact rational
/// multiple of pi, and multiples of pi/2 evaluate to exact 0 / +-1.
struct Angle {
    uint64_t s = 0;
    unsigned n = 1;
    int sign = 1;
    int64_t half_turns = 0;

    double radians() const;
    /// cos and sin of the full angle.
    std::pair<double, double> cos_sin() const;
    /// cos and sin of half the angle, the entries of the rotation matrix.
    std::pair<double, double> half_cos_sin() const;
};

/// Largest supported security parameter.
inline constexpr unsigned max_security_parameter = 60;

/// theta_n = pi / 2^(n-1).
double theta(unsigned n);

/// cos and sin of pi * numerator / 2^log2_denominator, exact at multiples of pi/2.
std::pair<double, double> cos_sin_pi_fraction(int64_t numerator, unsigned log2_denominator);

/// R(phi): the plane rotation by phi/2, so R(phi)|0> = cos(phi/2)|0> + sin(phi/2)|1>.
QubitState rotate(const QubitState &state, const Angle &angle);
QubitState rotate(const QubitState &state, double radians);

/// R(m*pi + (-1)^a * s * theta_n)|0>. Throws std::out_of_range when s >= 2^n.
QubitState encode_bit(uint8_t m, uint64_t s, uint8_t direction, unsigned n);

/// Born-rule measurement in the computational basis. Consumes one draw.
/// Probabilities within 1e-12 of 0 or 1 are snapped so basis states measure
/// deterministically.
uint8_t measure_computational(const QubitState &state, RandomSource &rng);

/// Real symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct DensityMatrix2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double trace() const {
        return xx + yy;
    }
    DensityMatrix2 operator-(const DensityMatrix2 &o) const {
        return {xx - o.xx, xy - o.xy, yy - o.yy};
    }
    DensityMatrix2 operator+(const DensityMatrix2 &o) const {
        return {xx + o.xx, xy + o.xy, yy + o.yy};
    }
    DensityMatrix2 operator*(double c) const {
        return {xx * c, xy * c, yy * c};
    }
    /// Largest absolute entry difference.
    double distance(const DensityMatrix2 &o) const;
};

/// |psi><psi|.
DensityMatrix2 projector(const QubitState &state);

/// sum p_i |psi_i><psi_i|. Throws std::invalid_argument if the weights do not
/// sum to 1 within 1e-9 or any weight is negative.
DensityMatrix2 density_of_ensemble(std::span<const std::pair<QubitState, double>> ensemble);

/// Closed-form eigendecomposition of a real symmetric 2x2 matrix.
struct SymmetricEigen2 {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    /// Unit eigenvector for lambda_max; the lambda_min eigenvector is its
    /// perpendicular.
    QubitState top_vector;
};
SymmetricEigen2 eigen_symmetric(const DensityMatrix2 &m);

/// Sum of absolute eigenvalues.
double trace_norm(const DensityMatrix2 &m);

/// Optimal probability of telling rho_0(s) from rho_1(s):
/// 1/2 (1 + |cos(s theta_n)|).
double helstrom_probability(uint64_t s, unsigned n);

}  // namespace sqot
