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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace sqot {

inline constexpr int report_schema_version = 1;

enum class Experiment {
    soundness,
    opposite_direction,
    same_direction,
    false_accept,
    bit_ot,
    concealing_before,
    concealing_after,
    obliviousness,
    l_distribution,
    pubkey_roundtrip,
    hash_universality,
};

std::string to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
const std::vector<Experiment> &all_experiments();

enum class ReportFormat { json, csv };

struct ExperimentConfig {
    Experiment experiment = Experiment::soundness;
    size_t k = 20;
    unsigned n = 4;
    /// Sessions, or per-angle trials for same-direction / concealing-after,
    /// or sampled functions for hash-universality.
    size_t trials = 1000;
    uint64_t master_seed = 1;
    double alpha = 0.01;
    /// Empty: no file is written.
    std::string output_path;
    ReportFormat format = ReportFormat::json;
    /// Worker threads. Results do not depend on this.
    unsigned threads = 1;
    /// Empty: no per-session transcripts.
    std::string transcripts_dir;

    /// Throws std::invalid_argument.
    void validate() const;
};

/// Parameters the acceptance suite uses for each experiment.
ExperimentConfig default_config(Experiment e);

/// One audited statistic: pass iff lower <= empirical <= upper.
struct Measurement {
    std::string label;
    double empirical = 0.0;
    double std_error = 0.0;
    size_t samples = 0;
    /// Analytic value or bound the check is centred on.
    double analytic = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::string criterion;
    bool pass = false;
    std::map<std::string, double> extra;
};

/// |empirical - p| <= 3 sigma with sigma the binomial error at p.
Measurement within_three_sigma(std::string label, size_t successes, size_t samples, double p);
/// empirical <= bound + 3 sigma with sigma the binomial error at the bound.
Measurement at_most_bound(std::string label, size_t successes, size_t samples, double bound);
/// successes == samples.
Measurement all_of(std::string label, size_t successes, size_t samples);
/// Free-form interval check.
Measurement in_interval(std::string label, double empirical, double analytic, double lower, double upper,
                        std::string criterion);

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<Measurement> measurements;
    bool pass = false;
    double wall_time_seconds = 0.0;
};

/// Runs `config.trials` independent trials, trial i seeded with
/// derive_trial_seed(master_seed, i), and folds them in index order.
/// Throws std::invalid_argument for an invalid config.
ExperimentReport run_experiment(const ExperimentConfig &config);

/// Full JSON report. With include_wall_time = false the result depends only on
/// the config.
nlohmann::ordered_json report_to_json(const ExperimentReport &report, bool include_wall_time = true);
std::string report_to_csv(const ExperimentReport &report);
/// Report in config.format. Throws std::runtime_error when the output path
/// cannot be written.
void write_report(const ExperimentReport &report);

/// Evaluates fn(i) for i in [0, count) on `threads` workers and returns the
/// results in index order.
template <typename T>
std::vector<T> run_indexed(size_t count, unsigned threads, const std::function<T(size_t)> &fn) {
    std::vector<std::optional<T>> slots(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) {
            slots[i].emplace(fn(i));
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (size_t i = next++; i < count; i = next++) {
                        slots[i].emplace(fn(i));
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                    next = count;
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace sqot
