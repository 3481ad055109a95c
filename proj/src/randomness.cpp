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

#include "sqot/randomness.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqot {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("significance level must be in (0, 1)");
    }
}

}  // namespace

BitString key_to_bits(const SecretKey &key) {
    key.validate();
    BitString out;
    out.reserve(key.s.size() * key.n);
    for (uint64_t v : key.s) {
        for (int b = static_cast<int>(key.n) - 1; b >= 0; --b) {
            out.push_back(static_cast<uint8_t>((v >> b) & 1));
        }
    }
    return out;
}

SecretKey bits_to_key(std::span<const uint8_t> bits, unsigned n) {
    SecretKey key{{}, n};
    key.validate();
    if (bits.size() % n != 0) {
        throw std::invalid_argument("bits_to_key: length is not a multiple of n");
    }
    for (size_t i = 0; i < bits.size(); i += n) {
        uint64_t v = 0;
        for (size_t j = 0; j < n; ++j) {
            v = (v << 1) | (bits[i + j] & 1);
        }
        key.s.push_back(v);
    }
    return key;
}

ChiSquareResult chi_square_test(std::span<const uint8_t> bits, unsigned symbol_width, double alpha) {
    check_alpha(alpha);
    if (symbol_width < 1 || symbol_width > 16) {
        throw std::invalid_argument("chi_square_test: symbol width must be in [1, 16]");
    }
    const size_t bins = size_t{1} << symbol_width;
    const size_t symbols = bits.size() / symbol_width;
    const double expected = static_cast<double>(symbols) / static_cast<double>(bins);
    if (expected < 5.0) {
        throw std::invalid_argument("chi_square_test: " + std::to_string(bits.size()) +
                                    " bits give fewer than 5 expected symbols per bin at width " +
                                    std::to_string(symbol_width));
    }
    std::vector<size_t> counts(bins, 0);
    for (size_t i = 0; i < symbols; ++i) {
        size_t v = 0;
        for (size_t j = 0; j < symbol_width; ++j) {
            v = (v << 1) | (bits[i * symbol_width + j] & 1);
        }
        ++counts[v];
    }
    double stat = 0.0;
    for (size_t c : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    ChiSquareResult r;
    r.statistic = stat;
    r.degrees_of_freedom = bins - 1;
    boost::math::chi_squared dist(static_cast<double>(r.degrees_of_freedom));
    r.critical_value = boost::math::quantile(boost::math::complement(dist, alpha));
    r.pass = stat <= r.critical_value;
    return r;
}

SerialCorrelationResult serial_correlation_test(std::span<const uint8_t> bits, double alpha) {
    check_alpha(alpha);
    if (bits.size() < min_serial_correlation_bits) {
        throw std::invalid_argument("serial_correlation_test: need at least 100 bits, got " +
                                    std::to_string(bits.size()));
    }
    const size_t pairs = bits.size() - 1;
    double mean_x = 0.0, mean_y = 0.0;
    for (size_t i = 0; i < pairs; ++i) {
        mean_x += bits[i];
        mean_y += bits[i + 1];
    }
    mean_x /= static_cast<double>(pairs);
    mean_y /= static_cast<double>(pairs);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < pairs; ++i) {
        double dx = bits[i] - mean_x;
        double dy = bits[i + 1] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    SerialCorrelationResult r;
    boost::math::normal standard;
    r.threshold = boost::math::quantile(boost::math::complement(standard, alpha / 2)) /
                  std::sqrt(static_cast<double>(bits.size()));
    if (sxx == 0.0 || syy == 0.0) {
        r.degenerate = true;
        r.pass = false;
        return r;
    }
    r.coefficient = sxy / std::sqrt(sxx * syy);
    r.pass = std::abs(r.coefficient) < r.threshold;
    return r;
}

unsigned chi_square_width_for(size_t bit_count) {
    for (unsigned w = max_chi_square_width; w >= 1; --w) {
        size_t symbols = bit_count / w;
        if (static_cast<double>(symbols) >= 5.0 * static_cast<double>(size_t{1} << w)) {
            return w;
        }
    }
    return 0;
}

RandomnessVerdict assess_randomness(std::span<const uint8_t> bits, double alpha) {
    check_alpha(alpha);
    RandomnessVerdict v;
    v.alpha = alpha;
    v.chi_square_width = chi_square_width_for(bits.size());
    if (v.chi_square_width > 0) {
        v.chi_square_applicable = true;
        auto chi = chi_square_test(bits, v.chi_square_width, alpha);
        v.chi_square_statistic = chi.statistic;
        v.chi_square_pass = chi.pass;
    }
    if (bits.size() >= min_serial_correlation_bits) {
        v.serial_applicable = true;
        auto sc = serial_correlation_test(bits, alpha);
        v.serial_correlation = sc.coefficient;
        v.serial_pass = sc.pass;
    }
    v.overall_pass = v.chi_square_pass && v.serial_pass;
    return v;
}

}  // namespace sqot
