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

#include "sqot/harness.hpp"

#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sqot/adversary.hpp"
#include "sqot/protocol.hpp"
#include "sqot/pubkey.hpp"
#include "sqot/random.hpp"
#include "sqot/transcript.hpp"

namespace sqot {

namespace {

constexpr double float_slack = 1e-9;

struct ExperimentName {
    Experiment id;
    std::string_view name;
};

constexpr std::array<ExperimentName, 11> experiment_names{{
    {Experiment::soundness, "soundness"},
    {Experiment::opposite_direction, "opposite-direction"},
    {Experiment::same_direction, "same-direction"},
    {Experiment::false_accept, "false-accept"},
    {Experiment::bit_ot, "bit-ot"},
    {Experiment::concealing_before, "concealing-before"},
    {Experiment::concealing_after, "concealing-after"},
    {Experiment::obliviousness, "obliviousness"},
    {Experiment::l_distribution, "l-distribution"},
    {Experiment::pubkey_roundtrip, "pubkey-roundtrip"},
    {Experiment::hash_universality, "hash-universality"},
}};

double binomial_sigma(double p, size_t samples) {
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
}

double cos_squared(uint64_t s, unsigned n) {
    double c = Angle{s, n, 1, 0}.cos_sin().first;
    return c * c;
}

BitString random_bits(size_t count, RandomSource &rng) {
    BitString out(count);
    for (auto &b : out) {
        b = rng.bit();
    }
    return out;
}

void finish(Measurement &m) {
    m.pass = m.lower <= m.empirical && m.empirical <= m.upper;
}

// Per-session transcript dump; a no-op when the directory is empty.
void dump_transcript(const ExperimentConfig &config, size_t index, const SessionTranscript &t) {
    if (config.transcripts_dir.empty()) {
        return;
    }
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%06zu.json", to_string(config.experiment).c_str(), index);
    auto path = std::filesystem::path(config.transcripts_dir) / name;
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write transcript " + path.string());
    }
    out << write_transcript(t);
}

SessionTranscript ot_transcript(const char *protocol, const ExperimentConfig &config, size_t index,
                                const SessionParams &params, const CipherState &cipher, const OpeningMessage &opening,
                                const BobOutcome &outcome) {
    SessionTranscript t;
    t.protocol = protocol;
    t.trial_index = index;
    t.trial_seed = derive_trial_seed(config.master_seed, index);
    t.k = params.k;
    t.n = params.n;
    t.alpha = params.alpha;
    t.hash = params.hash;
    t.cipher = cipher;
    t.opening = opening;
    t.outcome = outcome;
    return t;
}

template <typename T>
std::vector<T> trials(const ExperimentConfig &config, size_t count,
                      const std::function<T(size_t, RandomSource &)> &body) {
    std::function<T(size_t)> fn = [&](size_t i) {
        RandomSource rng(derive_trial_seed(config.master_seed, i));
        return body(i, rng);
    };
    return run_indexed<T>(count, config.threads, fn);
}

// ---- experiments --------------------------------------------------------

std::vector<Measurement> run_soundness(const ExperimentConfig &config) {
    struct Trial {
        bool received = false;
        bool correct = false;
        bool key_rejected = false;
        double eps_message = 0.0;
        double eps_full = 0.0;
    };
    auto results = trials<Trial>(config, config.trials, [&](size_t i, RandomSource &rng) {
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        BitString message = random_bits(config.k, rng);
        Transfer t = alice_transfer(message, params, rng);
        OpeningMessage opening = alice_open(t.record);
        BobOutcome outcome = bob_open(t.cipher, opening, params, rng);
        dump_transcript(config, i, ot_transcript("bit-string-ot", config, i, params, t.cipher, opening, outcome));
        Trial r;
        r.received = is_received(outcome);
        r.correct = r.received && std::get<Received>(outcome).message == message;
        r.key_rejected = !r.received && std::get<Rejected>(outcome).reason == RejectReason::key_not_random;
        double prod_msg = 1.0, prod_full = 1.0;
        for (size_t q = 0; q < params.register_size(); ++q) {
            double c2 = cos_squared(t.record.key.s[q], params.n);
            prod_full *= c2;
            if (q < params.k) {
                prod_msg *= c2;
            }
        }
        r.eps_message = 0.5 * prod_msg;
        r.eps_full = 0.5 * prod_full;
        return r;
    });
    size_t received = 0, wrong = 0, rejected_key = 0;
    double eps_msg = 0.0, eps_full = 0.0;
    for (const auto &r : results) {
        received += r.received;
        wrong += r.received && !r.correct;
        rejected_key += r.key_rejected;
        eps_msg += r.eps_message;
        eps_full += r.eps_full;
    }
    const size_t count = results.size();
    eps_msg /= static_cast<double>(count);
    eps_full /= static_cast<double>(count);
    const double hash_bound = std::ldexp(1.0, -static_cast<int>(config.k / 2));
    const double rate = static_cast<double>(received) / static_cast<double>(count);
    const double sigma_half = binomial_sigma(0.5, count);

    std::vector<Measurement> out;
    Measurement range = in_interval("received_rate", rate, 0.5 + eps_full, 0.5 - 3 * sigma_half,
                                    0.5 + hash_bound + 3 * sigma_half, "0.5 - 3 sigma <= rate <= 0.5 + 2^-(k/2) + 3 sigma");
    range.std_error = sigma_half;
    range.samples = count;
    out.push_back(range);
    out.push_back(within_three_sigma("received_rate_vs_expectation", received, count, 0.5 + eps_full));
    out.push_back(in_interval("epsilon_mean_full_register", eps_full, hash_bound, 0.0, hash_bound,
                              "mean of 1/2 prod cos^2 over 3k/2 qubits <= 2^-(k/2)"));
    out.push_back(in_interval("epsilon_mean_message_only", eps_msg, hash_bound, 0.0, hash_bound,
                              "mean of 1/2 prod cos^2 over k qubits <= 2^-(k/2)"));
    out.push_back(at_most_bound("wrong_message_accepted_rate", wrong, count, hash_bound));
    out.push_back(in_interval("key_rejected_rate", static_cast<double>(rejected_key) / static_cast<double>(count), 0.0,
                              0.0, 0.0, "honest keys are never rejected"));
    return out;
}

std::vector<Measurement> run_opposite_direction(const ExperimentConfig &config) {
    auto results = trials<uint8_t>(config, config.trials, [&](size_t i, RandomSource &rng) -> uint8_t {
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        BitString message = random_bits(config.k, rng);
        Transfer t = alice_transfer(message, params, rng);
        OpeningMessage opening = alice_open(t.record);
        BobOutcome outcome = bob_open_with_direction(t.cipher, opening, params, 1 - t.record.direction, rng);
        dump_transcript(config, i, ot_transcript("bit-string-ot", config, i, params, t.cipher, opening, outcome));
        return is_received(outcome) && std::get<Received>(outcome).message == message;
    });
    size_t exact = 0;
    for (auto r : results) {
        exact += r;
    }
    return {all_of("exact_recovery_rate", exact, results.size())};
}

std::vector<Measurement> run_same_direction(const ExperimentConfig &config) {
    const uint64_t angles = uint64_t{1} << config.n;
    auto results = trials<uint8_t>(config, angles * config.trials, [&](size_t i, RandomSource &rng) -> uint8_t {
        const uint64_t s = i / config.trials;
        uint8_t m = rng.bit();
        uint8_t a = rng.bit();
        QubitState q = encode_bit(m, s, a, config.n);
        QubitState rotated = rotate(q, bob_rotation(s, config.n, a));
        return measure_computational(rotated, rng) == m;
    });
    std::vector<Measurement> out;
    for (uint64_t s = 0; s < angles; ++s) {
        size_t agree = 0;
        for (size_t j = 0; j < config.trials; ++j) {
            agree += results[s * config.trials + j];
        }
        auto m = within_three_sigma("per_qubit_agreement_s" + std::to_string(s), agree, config.trials,
                                    cos_squared(s, config.n));
        m.extra["s"] = static_cast<double>(s);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Measurement> run_false_accept(const ExperimentConfig &config) {
    auto results = trials<uint8_t>(config, config.trials, [&](size_t i, RandomSource &rng) -> uint8_t {
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        BitString message = random_bits(config.k, rng);
        Transfer t = alice_transfer(message, params, rng);
        OpeningMessage opening = alice_open(t.record);
        BobOutcome outcome = bob_open_with_direction(t.cipher, opening, params, t.record.direction, rng);
        dump_transcript(config, i, ot_transcript("bit-string-ot", config, i, params, t.cipher, opening, outcome));
        return is_received(outcome);
    });
    size_t accepted = 0;
    for (auto r : results) {
        accepted += r;
    }
    return {at_most_bound("same_direction_accept_rate", accepted, results.size(),
                          std::ldexp(1.0, -static_cast<int>(config.k / 2)))};
}

std::vector<Measurement> run_bit_ot(const ExperimentConfig &config) {
    struct Trial {
        bool received = false;
        bool bit_correct = false;
    };
    auto results = trials<Trial>(config, config.trials, [&](size_t i, RandomSource &rng) {
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        uint8_t b = rng.bit();
        BitTransfer t = single_bit_ot_alice(b, params, rng);
        OpeningMessage opening = alice_open(t.record);
        BobOutcome outcome = bob_open(t.cipher, opening, params, rng);
        auto bit = single_bit_ot_bob(outcome);
        if (!config.transcripts_dir.empty()) {
            auto tr = ot_transcript("single-bit-ot", config, i, params, t.cipher, opening, outcome);
            tr.bit = bit;
            dump_transcript(config, i, tr);
        }
        return Trial{bit.has_value(), bit.has_value() && *bit == b};
    });
    size_t received = 0, correct = 0;
    for (const auto &r : results) {
        received += r.received;
        correct += r.bit_correct;
    }
    return {all_of("bit_correct_given_received", correct, received),
            within_three_sigma("received_rate", received, results.size(), 0.5)};
}

std::vector<Measurement> run_concealing_before(const ExperimentConfig &config) {
    struct Trial {
        uint8_t direction = 0;
        size_t correct_bits = 0;
        bool whole_message = false;
        // (m_i, guess_i) cell counts, index 2 * m + g.
        std::array<size_t, 4> cells{};
    };
    auto results = trials<Trial>(config, config.trials, [&](size_t, RandomSource &rng) {
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        BitString message = random_bits(config.k, rng);
        Transfer t = alice_transfer(message, params, rng);
        BitString guess = bob_guess_before_opening(t.cipher, rng);
        Trial r;
        r.direction = t.record.direction;
        for (size_t q = 0; q < config.k; ++q) {
            r.correct_bits += guess[q] == message[q];
            ++r.cells[2 * message[q] + guess[q]];
        }
        r.whole_message = guess == message;
        return r;
    });
    size_t correct = 0, whole = 0;
    std::array<std::array<double, 4>, 2> table{};
    for (const auto &r : results) {
        correct += r.correct_bits;
        whole += r.whole_message;
        for (size_t c = 0; c < 4; ++c) {
            table[r.direction][c] += static_cast<double>(r.cells[c]);
        }
    }
    // Chi-square test of homogeneity: does the (m, guess) distribution depend on a?
    double row[2] = {0, 0}, col[4] = {0, 0, 0, 0}, total = 0;
    for (size_t a = 0; a < 2; ++a) {
        for (size_t c = 0; c < 4; ++c) {
            row[a] += table[a][c];
            col[c] += table[a][c];
            total += table[a][c];
        }
    }
    double stat = 0.0;
    for (size_t a = 0; a < 2; ++a) {
        for (size_t c = 0; c < 4; ++c) {
            double expected = row[a] * col[c] / total;
            if (expected > 0) {
                stat += (table[a][c] - expected) * (table[a][c] - expected) / expected;
            }
        }
    }
    boost::math::chi_squared dist(3.0);
    double critical = boost::math::quantile(boost::math::complement(dist, config.alpha));
    auto independence = in_interval("direction_independence_chi2", stat, 0.0, 0.0, critical,
                                    "chi-square homogeneity of (m_i, guess_i) across a, df = 3, stat <= critical");
    independence.samples = static_cast<size_t>(total);
    return {within_three_sigma("per_bit_success", correct, results.size() * config.k, 0.5),
            within_three_sigma("whole_message_success", whole, results.size(),
                               std::ldexp(1.0, -static_cast<int>(config.k))),
            independence};
}

std::vector<Measurement> run_concealing_after(const ExperimentConfig &config) {
    const uint64_t angles = uint64_t{1} << config.n;
    auto results = trials<uint8_t>(config, angles * config.trials, [&](size_t i, RandomSource &rng) -> uint8_t {
        const uint64_t s = i / config.trials;
        uint8_t m = rng.bit();
        uint8_t a = rng.bit();
        QubitState q = encode_bit(m, s, a, config.n);
        return helstrom_guess(q, s, config.n, rng) == m;
    });
    std::vector<Measurement> out;
    double worst = 0.0;
    for (uint64_t s = 0; s < angles; ++s) {
        size_t hits = 0;
        for (size_t j = 0; j < config.trials; ++j) {
            hits += results[s * config.trials + j];
        }
        const double closed = helstrom_probability(s, config.n);
        auto m = within_three_sigma("helstrom_success_s" + std::to_string(s), hits, config.trials, closed);
        m.extra["s"] = static_cast<double>(s);
        out.push_back(std::move(m));
        double trace_form =
            0.5 + 0.25 * trace_norm(direction_mixture(0, s, config.n) - direction_mixture(1, s, config.n));
        worst = std::max(worst, std::abs(trace_form - closed));
    }
    out.push_back(in_interval("closed_form_vs_trace_norm_max_error", worst, 0.0, 0.0, 1e-10,
                              "max_s |1/2 + 1/4 Tr|rho0 - rho1| - 1/2(1 + |cos s theta|)| <= 1e-10"));
    return out;
}

std::vector<Measurement> run_obliviousness(const ExperimentConfig &config) {
    const size_t keys = std::min<size_t>(20, config.trials);
    const size_t per_key = config.trials / keys;
    struct Setup {
        SessionParams params;
        CheatingAliceState state;
        size_t l;
        double exact;
    };
    std::vector<Setup> setups;
    setups.reserve(keys);
    for (size_t j = 0; j < keys; ++j) {
        // Key streams sit after the trial streams so the two never share a seed.
        RandomSource rng(derive_trial_seed(config.master_seed, config.trials + j));
        SessionParams params = agree_session(config.k, config.n, rng, config.alpha);
        SecretKey key = sample_session_key(params, rng);
        BitString message = random_bits(config.k, rng);
        CheatingAliceState state = build_cheating_state(message, key, params);
        size_t l = count_critical_angles(key).l;
        double exact = cheating_success_probability(state, params);
        setups.push_back({std::move(params), std::move(state), l, exact});
    }
    auto results = trials<uint8_t>(config, keys * per_key, [&](size_t i, RandomSource &rng) -> uint8_t {
        const Setup &setup = setups[i / per_key];
        OpeningMessage opening{setup.state.key, setup.state.key.n};
        BobOutcome outcome = bob_open(setup.state.as_cipher(), opening, setup.params, rng);
        return is_received(outcome) && std::get<Received>(outcome).message == setup.state.message;
    });
    std::vector<Measurement> out;
    for (size_t j = 0; j < keys; ++j) {
        size_t hits = 0;
        for (size_t t = 0; t < per_key; ++t) {
            hits += results[j * per_key + t];
        }
        auto m = at_most_bound("pr_ch_key" + std::to_string(j), hits, per_key, obliviousness_bound(setups[j].l));
        m.extra["l"] = static_cast<double>(setups[j].l);
        m.extra["product_state_probability"] = setups[j].exact;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Measurement> run_l_distribution(const ExperimentConfig &config) {
    auto counts = trials<size_t>(config, config.trials, [&](size_t, RandomSource &rng) {
        return count_critical_angles(sample_key(config.k, config.n, rng)).l;
    });
    LStatistics st = summarize_l_counts(config.k, counts);
    const double k = static_cast<double>(config.k);
    const double se = std::sqrt(st.variance / static_cast<double>(st.samples));
    auto mean = in_interval("l_mean", st.mean, k / 4, k / 4 - 3 * se, k / 4 + 3 * se, "|mean - k/4| <= 3 sigma");
    mean.std_error = se;
    mean.samples = st.samples;
    auto var = in_interval("l_variance", st.variance, k / 16, 0.9 * k / 16, 1.1 * k / 16,
                           "variance within 10% of k/16");
    var.samples = st.samples;
    auto frac = in_interval("l_in_interval_fraction", st.in_interval_fraction, 0.998, 0.996, 1.0,
                            "fraction in [(k-3 sqrt k)/4, (k+3 sqrt k)/4] = 99.8% +- 0.2pp");
    frac.samples = st.samples;
    frac.extra["interval_low"] = st.interval_low;
    frac.extra["interval_high"] = st.interval_high;
    return {mean, var, frac};
}

std::vector<Measurement> run_pubkey_roundtrip(const ExperimentConfig &config) {
    auto results = trials<uint8_t>(config, config.trials, [&](size_t i, RandomSource &rng) -> uint8_t {
        KeyPair pair = keygen(config.k, config.n, rng);
        BitString m = random_bits(config.k, rng);
        CipherState cipher = encrypt(m, std::move(pair.pub));
        BitString back = decrypt(cipher, pair.secret, rng);
        if (!config.transcripts_dir.empty()) {
            SessionTranscript t;
            t.protocol = "pubkey";
            t.trial_index = i;
            t.trial_seed = derive_trial_seed(config.master_seed, i);
            t.k = config.k;
            t.n = config.n;
            t.alpha = config.alpha;
            t.cipher = cipher;
            t.opening = {pair.secret, pair.secret.n};
            t.decrypted = back;
            dump_transcript(config, i, t);
        }
        return back == m;
    });
    size_t exact = 0;
    for (auto r : results) {
        exact += r;
    }
    return {all_of("roundtrip_exact_rate", exact, results.size())};
}

std::vector<Measurement> run_hash_universality(const ExperimentConfig &config) {
    struct Trial {
        double collision_rate = 0.0;
        bool full_rank = false;
    };
    auto results = trials<Trial>(config, config.trials, [&](size_t, RandomSource &rng) {
        HashFunctionGF2 h = sample_hash(config.k, rng);
        const size_t inputs = size_t{1} << config.k;
        std::vector<size_t> buckets(size_t{1} << (config.k / 2), 0);
        BitString x(config.k);
        for (size_t v = 0; v < inputs; ++v) {
            for (size_t b = 0; b < config.k; ++b) {
                x[b] = static_cast<uint8_t>((v >> (config.k - 1 - b)) & 1);
            }
            BitString d = h(x);
            size_t code = 0;
            for (uint8_t bit : d) {
                code = (code << 1) | bit;
            }
            ++buckets[code];
        }
        double colliding = 0.0;
        for (size_t c : buckets) {
            colliding += c > 1 ? 0.5 * static_cast<double>(c) * static_cast<double>(c - 1) : 0.0;
        }
        double pairs = 0.5 * static_cast<double>(inputs) * static_cast<double>(inputs - 1);
        return Trial{colliding / pairs, h.rank() == config.k / 2};
    });
    double mean = 0.0;
    size_t full_rank = 0;
    for (const auto &r : results) {
        mean += r.collision_rate;
        full_rank += r.full_rank;
    }
    const double count = static_cast<double>(results.size());
    mean /= count;
    double ss = 0.0;
    for (const auto &r : results) {
        ss += (r.collision_rate - mean) * (r.collision_rate - mean);
    }
    const double se = results.size() > 1 ? std::sqrt(ss / (count - 1.0) / count) : 0.0;
    const double bound = std::ldexp(1.0, -static_cast<int>(config.k / 2));
    auto m = in_interval("pair_collision_rate", mean, bound, 0.0, bound + 3 * se,
                         "mean per-function collision rate <= 2^-(k/2) + 3 sigma");
    m.std_error = se;
    m.samples = results.size();
    m.extra["full_rank_fraction"] = static_cast<double>(full_rank) / count;
    return {m};
}

}  // namespace

std::string to_string(Experiment e) {
    for (const auto &entry : experiment_names) {
        if (entry.id == e) {
            return std::string(entry.name);
        }
    }
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
    for (const auto &entry : experiment_names) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

const std::vector<Experiment> &all_experiments() {
    static const std::vector<Experiment> all = [] {
        std::vector<Experiment> v;
        for (const auto &entry : experiment_names) {
            v.push_back(entry.id);
        }
        return v;
    }();
    return all;
}

void ExperimentConfig::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (k < min_message_bits || k % 2 != 0) {
        throw std::invalid_argument("k must be even and >= 8");
    }
    if (n < 1 || n > max_security_parameter) {
        throw std::invalid_argument("n must be in [1, 60]");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must be in (0, 1)");
    }
    if ((experiment == Experiment::same_direction || experiment == Experiment::concealing_after) && n > 16) {
        throw std::invalid_argument("per-angle experiments need n <= 16");
    }
    if (experiment == Experiment::hash_universality && k > 20) {
        throw std::invalid_argument("hash-universality enumerates 2^k inputs; k must be <= 20");
    }
    if (experiment == Experiment::l_distribution && trials < 2) {
        throw std::invalid_argument("l-distribution needs at least 2 trials");
    }
}

ExperimentConfig default_config(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    switch (e) {
        case Experiment::soundness: c.k = 20; c.n = 4; c.trials = 20000; break;
        case Experiment::opposite_direction: c.k = 16; c.n = 4; c.trials = 1000; break;
        case Experiment::same_direction: c.k = 8; c.n = 4; c.trials = 10000; break;
        case Experiment::false_accept: c.k = 16; c.n = 4; c.trials = 20000; break;
        case Experiment::bit_ot: c.k = 64; c.n = 4; c.trials = 10000; break;
        case Experiment::concealing_before: c.k = 8; c.n = 4; c.trials = 10000; break;
        case Experiment::concealing_after: c.k = 8; c.n = 3; c.trials = 10000; break;
        case Experiment::obliviousness: c.k = 40; c.n = 4; c.trials = 10000; break;
        case Experiment::l_distribution: c.k = 400; c.n = 16; c.trials = 10000; break;
        case Experiment::pubkey_roundtrip: c.k = 16; c.n = 4; c.trials = 1000; break;
        case Experiment::hash_universality: c.k = 8; c.n = 4; c.trials = 200; break;
    }
    return c;
}

Measurement within_three_sigma(std::string label, size_t successes, size_t samples, double p) {
    Measurement m;
    m.label = std::move(label);
    m.samples = samples;
    m.empirical = samples ? static_cast<double>(successes) / static_cast<double>(samples) : 0.0;
    m.analytic = p;
    m.std_error = samples ? binomial_sigma(p, samples) : 0.0;
    m.lower = p - 3 * m.std_error - float_slack;
    m.upper = p + 3 * m.std_error + float_slack;
    m.criterion = "|empirical - analytic| <= 3 sigma";
    finish(m);
    return m;
}

Measurement at_most_bound(std::string label, size_t successes, size_t samples, double bound) {
    Measurement m;
    m.label = std::move(label);
    m.samples = samples;
    m.empirical = samples ? static_cast<double>(successes) / static_cast<double>(samples) : 0.0;
    m.analytic = bound;
    m.std_error = samples ? binomial_sigma(bound, samples) : 0.0;
    m.lower = 0.0;
    m.upper = bound + 3 * m.std_error + float_slack;
    m.criterion = "empirical <= bound + 3 sigma";
    finish(m);
    return m;
}

Measurement all_of(std::string label, size_t successes, size_t samples) {
    Measurement m;
    m.label = std::move(label);
    m.samples = samples;
    m.empirical = samples ? static_cast<double>(successes) / static_cast<double>(samples) : 1.0;
    m.analytic = 1.0;
    m.lower = 1.0;
    m.upper = 1.0;
    m.criterion = "every sample succeeds";
    finish(m);
    return m;
}

Measurement in_interval(std::string label, double empirical, double analytic, double lower, double upper,
                        std::string criterion) {
    Measurement m;
    m.label = std::move(label);
    m.empirical = empirical;
    m.analytic = analytic;
    m.lower = lower;
    m.upper = upper;
    m.criterion = std::move(criterion);
    finish(m);
    return m;
}

ExperimentReport run_experiment(const ExperimentConfig &config) {
    config.validate();
    if (!config.transcripts_dir.empty()) {
        std::filesystem::create_directories(config.transcripts_dir);
    }
    auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.config = config;
    switch (config.experiment) {
        case Experiment::soundness: report.measurements = run_soundness(config); break;
        case Experiment::opposite_direction: report.measurements = run_opposite_direction(config); break;
        case Experiment::same_direction: report.measurements = run_same_direction(config); break;
        case Experiment::false_accept: report.measurements = run_false_accept(config); break;
        case Experiment::bit_ot: report.measurements = run_bit_ot(config); break;
        case Experiment::concealing_before: report.measurements = run_concealing_before(config); break;
        case Experiment::concealing_after: report.measurements = run_concealing_after(config); break;
        case Experiment::obliviousness: report.measurements = run_obliviousness(config); break;
        case Experiment::l_distribution: report.measurements = run_l_distribution(config); break;
        case Experiment::pubkey_roundtrip: report.measurements = run_pubkey_roundtrip(config); break;
        case Experiment::hash_universality: report.measurements = run_hash_universality(config); break;
    }
    report.pass = std::all_of(report.measurements.begin(), report.measurements.end(),
                              [](const Measurement &m) { return m.pass; });
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::ordered_json report_to_json(const ExperimentReport &report, bool include_wall_time) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["experiment"] = to_string(report.config.experiment);
    ordered_json cfg;
    cfg["k"] = report.config.k;
    cfg["n"] = report.config.n;
    cfg["trials"] = report.config.trials;
    cfg["master_seed"] = report.config.master_seed;
    cfg["alpha"] = report.config.alpha;
    j["config"] = cfg;
    ordered_json ms = ordered_json::array();
    for (const auto &m : report.measurements) {
        ordered_json e;
        e["label"] = m.label;
        e["empirical"] = m.empirical;
        e["std_error"] = m.std_error;
        e["samples"] = m.samples;
        e["analytic"] = m.analytic;
        e["lower"] = m.lower;
        e["upper"] = m.upper;
        e["criterion"] = m.criterion;
        e["pass"] = m.pass;
        if (!m.extra.empty()) {
            e["extra"] = m.extra;
        }
        ms.push_back(std::move(e));
    }
    j["measurements"] = std::move(ms);
    j["pass"] = report.pass;
    if (include_wall_time) {
        j["wall_time_seconds"] = report.wall_time_seconds;
    }
    return j;
}

std::string report_to_csv(const ExperimentReport &report) {
    std::ostringstream out;
    out.precision(17);
    out << "experiment,label,empirical,std_error,samples,analytic,lower,upper,pass\n";
    const std::string name = to_string(report.config.experiment);
    for (const auto &m : report.measurements) {
        out << name << ',' << m.label << ',' << m.empirical << ',' << m.std_error << ',' << m.samples << ','
            << m.analytic << ',' << m.lower << ',' << m.upper << ',' << (m.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

void write_report(const ExperimentReport &report) {
    const auto &path = report.config.output_path;
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write report to " + path);
    }
    if (report.config.format == ReportFormat::csv) {
        out << report_to_csv(report);
    } else {
        out << report_to_json(report).dump(2) << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed writing report to " + path);
    }
}

}  // namespace sqot
