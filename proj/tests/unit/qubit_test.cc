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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "sqot/qubit.hpp"

using namespace sqot;

namespace {

constexpr double pi = std::numbers::pi;

// Explicit rotation matrix for R(phi): rotation of the plane by phi/2.
Eigen::Matrix2d rotation_matrix(double phi) {
    Eigen::Matrix2d m;
    m << std::cos(phi / 2), -std::sin(phi / 2), std::sin(phi / 2), std::cos(phi / 2);
    return m;
}

void expect_state_near(const QubitState &a, const QubitState &b, double tol) {
    EXPECT_NEAR(a.amp0, b.amp0, tol);
    EXPECT_NEAR(a.amp1, b.amp1, tol);
}

QubitState random_state(RandomSource &rng) {
    double t = 2 * pi * rng.uniform01();
    return {std::cos(t), std::sin(t)};
}

}  // namespace

TEST(rotate, identity_and_half_turn) {
    EXPECT_EQ(rotate(QubitState::zero(), Angle{0, 4, 1, 0}), QubitState::zero());
    // phi = pi is exact: one half turn.
    EXPECT_EQ(rotate(QubitState::zero(), Angle{0, 4, 1, 1}), QubitState::one());
    expect_state_near(rotate(QubitState::zero(), pi), QubitState::one(), 1e-15);
}

TEST(rotate, composition_matches_single_rotation_grid) {
    // 100 angle pairs (s1, s2) theta_4 with s1, s2 in a 10 x 10 grid, including
    // the 3 theta_4 + 5 theta_4 example.
    for (uint64_t s1 = 0; s1 < 10; ++s1) {
        for (uint64_t s2 = 0; s2 < 10; ++s2) {
            QubitState two_step = rotate(rotate(QubitState::zero(), Angle{s1, 4, 1, 0}), Angle{s2, 4, 1, 0});
            Eigen::Vector2d oracle = rotation_matrix(s2 * pi / 8) * rotation_matrix(s1 * pi / 8) *
                                     Eigen::Vector2d(1.0, 0.0);
            EXPECT_NEAR(two_step.amp0, oracle(0), 1e-12);
            EXPECT_NEAR(two_step.amp1, oracle(1), 1e-12);
            QubitState one_step = rotate(QubitState::zero(), Angle{s1 + s2, 4, 1, 0});
            Eigen::Vector2d single = rotation_matrix((s1 + s2) * pi / 8) * Eigen::Vector2d(1.0, 0.0);
            EXPECT_NEAR(one_step.amp0, single(0), 1e-12);
            EXPECT_NEAR(one_step.amp1, single(1), 1e-12);
            EXPECT_NEAR(two_step.amp0, single(0), 1e-12);
            EXPECT_NEAR(two_step.amp1, single(1), 1e-12);
        }
    }
}

TEST(rotate, norm_group_law_and_inversion_properties) {
    RandomSource rng(2024);
    for (int t = 0; t < 1000; ++t) {
        QubitState psi = random_state(rng);
        double phi1 = 4 * pi * (rng.uniform01() - 0.5);
        double phi2 = 4 * pi * (rng.uniform01() - 0.5);
        QubitState a = rotate(rotate(psi, phi1), phi2);
        QubitState b = rotate(psi, phi1 + phi2);
        EXPECT_NEAR(a.norm(), 1.0, 1e-12);
        expect_state_near(a, b, 1e-10);
        expect_state_near(rotate(rotate(psi, phi1), -phi1), psi, 1e-10);
    }
}

TEST(angle, exact_at_multiples_of_half_pi) {
    for (unsigned n = 1; n <= 8; ++n) {
        const uint64_t quarter = n >= 2 ? uint64_t{1} << (n - 2) : 0;
        if (n >= 2) {
            auto [c, s] = Angle{quarter, n, 1, 0}.cos_sin();
            EXPECT_EQ(c, 0.0);
            EXPECT_EQ(s, 1.0);
        }
        auto [c, s] = Angle{uint64_t{1} << (n - 1), n, 1, 0}.cos_sin();
        EXPECT_EQ(c, -1.0);
        EXPECT_EQ(s, 0.0);
    }
    EXPECT_NEAR((Angle{3, 4, -1, 1}.radians()), pi - 3 * pi / 8, 1e-15);
}

TEST(angle, matches_radian_evaluation) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            for (int sign : {-1, 1}) {
                for (int h = -2; h <= 2; ++h) {
                    Angle a{s, n, sign, h};
                    auto [hc, hs] = a.half_cos_sin();
                    EXPECT_NEAR(hc, std::cos(a.radians() / 2), 1e-12);
                    EXPECT_NEAR(hs, std::sin(a.radians() / 2), 1e-12);
                }
            }
        }
    }
}

TEST(encode_bit, examples) {
    EXPECT_EQ(encode_bit(0, 0, 0, 4), QubitState::zero());
    EXPECT_EQ(encode_bit(1, 0, 0, 4), QubitState::one());
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(encode_bit(0, uint64_t{1} << (n - 1), 0, n), QubitState::one());
    }
    EXPECT_THROW(encode_bit(0, 16, 0, 4), std::out_of_range);
    EXPECT_THROW(encode_bit(0, 0, 0, 0), std::out_of_range);
}

TEST(encode_bit, encodings_of_zero_and_one_are_orthogonal) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            for (uint8_t a : {0, 1}) {
                EXPECT_NEAR(inner(encode_bit(0, s, a, n), encode_bit(1, s, a, n)), 0.0, 1e-12);
            }
        }
    }
}

TEST(measure_computational, basis_states_are_deterministic) {
    RandomSource rng(1);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(measure_computational(QubitState::zero(), rng), 0);
        EXPECT_EQ(measure_computational(QubitState::one(), rng), 1);
    }
}

TEST(measure_computational, born_rule_on_plus_state) {
    RandomSource rng(99);
    const QubitState plus{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
    const int trials = 100000;
    int zeros = 0;
    for (int i = 0; i < trials; ++i) {
        zeros += measure_computational(plus, rng) == 0;
    }
    double freq = static_cast<double>(zeros) / trials;
    EXPECT_GE(freq, 0.5 - 3 * 0.00158);
    EXPECT_LE(freq, 0.5 + 3 * 0.00158);
}

TEST(density_of_ensemble, examples) {
    const std::pair<QubitState, double> pure[] = {{QubitState::zero(), 1.0}};
    EXPECT_LE(density_of_ensemble(pure).distance({1, 0, 0}), 1e-15);
    const std::pair<QubitState, double> mixed[] = {{QubitState::zero(), 0.5}, {QubitState::one(), 0.5}};
    EXPECT_LE(density_of_ensemble(mixed).distance({0.5, 0, 0.5}), 1e-15);
    const std::pair<QubitState, double> bad[] = {{QubitState::zero(), 0.5}, {QubitState::one(), 0.4}};
    EXPECT_THROW(density_of_ensemble(bad), std::invalid_argument);
}

TEST(density_of_ensemble, direction_and_bit_mixture_is_maximally_mixed) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            std::vector<std::pair<QubitState, double>> states;
            for (uint8_t m : {0, 1}) {
                for (uint8_t a : {0, 1}) {
                    states.push_back({encode_bit(m, s, a, n), 0.25});
                }
            }
            DensityMatrix2 rho = density_of_ensemble(states);
            EXPECT_LE(rho.distance({0.5, 0, 0.5}), 1e-12);
            EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
            // For each fixed direction the two bit encodings also mix to 1/2.
            for (uint8_t a : {0, 1}) {
                const std::pair<QubitState, double> dir[] = {{encode_bit(0, s, a, n), 0.5},
                                                             {encode_bit(1, s, a, n), 0.5}};
                EXPECT_LE(density_of_ensemble(dir).distance({0.5, 0, 0.5}), 1e-12);
            }
        }
    }
}

TEST(eigen_symmetric, agrees_with_eigen_solver) {
    RandomSource rng(3);
    for (int t = 0; t < 500; ++t) {
        DensityMatrix2 m{2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1, 2 * rng.uniform01() - 1};
        Eigen::Matrix2d em;
        em << m.xx, m.xy, m.xy, m.yy;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(em);
        auto e = eigen_symmetric(m);
        EXPECT_NEAR(e.lambda_min, solver.eigenvalues()(0), 1e-12);
        EXPECT_NEAR(e.lambda_max, solver.eigenvalues()(1), 1e-12);
        Eigen::Vector2d v(e.top_vector.amp0, e.top_vector.amp1);
        EXPECT_NEAR((em * v - e.lambda_max * v).norm(), 0.0, 1e-12);
    }
}

TEST(helstrom_probability, examples) {
    EXPECT_EQ(helstrom_probability(0, 4), 1.0);
    for (unsigned n = 2; n <= 8; ++n) {
        EXPECT_EQ(helstrom_probability(uint64_t{1} << (n - 2), n), 0.5);
    }
    EXPECT_NEAR(helstrom_probability(1, 3), 0.5 * (1 + std::cos(pi / 4)), 1e-15);
    EXPECT_NEAR(helstrom_probability(1, 3), 0.85355, 1e-5);
    EXPECT_THROW(helstrom_probability(8, 3), std::out_of_range);
}

TEST(helstrom_probability, closed_form_matches_eigendecomposition_oracle) {
    for (unsigned n = 1; n <= 8; ++n) {
        const double th = pi / std::ldexp(1.0, static_cast<int>(n) - 1);
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            // rho_m = 1/2 sum over directions of |m(s)_+-><m(s)_+-|, built from the
            // textbook amplitudes cos(m pi/2 +- s theta/2), sin(...).
            Eigen::Matrix2d rho[2];
            for (int m = 0; m < 2; ++m) {
                rho[m].setZero();
                for (int sign : {1, -1}) {
                    double x = m * pi / 2 + sign * static_cast<double>(s) * th / 2;
                    Eigen::Vector2d v(std::cos(x), std::sin(x));
                    rho[m] += 0.5 * v * v.transpose();
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(rho[0] - rho[1]);
            double trace_abs = solver.eigenvalues().cwiseAbs().sum();
            EXPECT_NEAR(0.5 + 0.25 * trace_abs, helstrom_probability(s, n), 1e-10) << "s=" << s << " n=" << n;
        }
    }
}
