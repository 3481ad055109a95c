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

// Command-line front end: single protocol sessions and Monte-Carlo experiments.
//
// Exit status: 0 pass, 1 statistical failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sqot/harness.hpp"
#include "sqot/protocol.hpp"
#include "sqot/pubkey.hpp"
#include "sqot/random.hpp"
#include "sqot/transcript.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_statistical_fail = 1;
constexpr int exit_usage = 2;

struct SessionOptions {
    size_t k = 16;
    unsigned n = 4;
    uint64_t seed = 1;
    double alpha = 0.01;
    std::string message;
    std::string out;
    std::string transcripts;
};

void add_session_options(CLI::App *cmd, SessionOptions &o) {
    cmd->add_option("--k", o.k, "Message length in bits (even, >= 8)");
    cmd->add_option("--n", o.n, "Security parameter")->check(CLI::Range(1u, sqot::max_security_parameter));
    cmd->add_option("--seed", o.seed, "Seed for the session's random source");
    cmd->add_option("--alpha", o.alpha, "Significance level of Bob's key check");
    cmd->add_option("--message", o.message, "Message bits, e.g. 0110...; random when omitted");
    cmd->add_option("--out", o.out, "Write the session transcript here instead of stdout");
    cmd->add_option("--transcripts", o.transcripts, "Also write the transcript into this directory");
}

void emit(const SessionOptions &o, const std::string &text) {
    if (!o.transcripts.empty()) {
        std::filesystem::create_directories(o.transcripts);
        std::ofstream f(std::filesystem::path(o.transcripts) / "session_000000.json");
        if (!f) {
            throw std::runtime_error("cannot write transcript into " + o.transcripts);
        }
        f << text;
    }
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) {
        throw std::runtime_error("cannot write " + o.out);
    }
    f << text;
}

sqot::BitString message_or_random(const SessionOptions &o, size_t length, sqot::RandomSource &rng) {
    if (!o.message.empty()) {
        return sqot::parse_bits(o.message);
    }
    sqot::BitString m(length);
    for (auto &b : m) {
        b = rng.bit();
    }
    return m;
}

sqot::SessionTranscript session_transcript(const char *protocol, const SessionOptions &o,
                                           const sqot::SessionParams &params, const sqot::CipherState &cipher,
                                           const sqot::OpeningMessage &opening, const sqot::BobOutcome &outcome) {
    sqot::SessionTranscript t;
    t.protocol = protocol;
    t.trial_seed = o.seed;
    t.k = params.k;
    t.n = params.n;
    t.alpha = params.alpha;
    t.hash = params.hash;
    t.cipher = cipher;
    t.opening = opening;
    t.outcome = outcome;
    return t;
}

int run_ot(const SessionOptions &o) {
    sqot::RandomSource rng(o.seed);
    auto params = sqot::agree_session(o.k, o.n, rng, o.alpha);
    auto message = message_or_random(o, o.k, rng);
    auto transfer = sqot::alice_transfer(message, params, rng);
    auto opening = sqot::alice_open(transfer.record);
    auto outcome = sqot::bob_open(transfer.cipher, opening, params, rng);
    emit(o, sqot::write_transcript(session_transcript("bit-string-ot", o, params, transfer.cipher, opening, outcome)));
    return exit_pass;
}

int run_bit_ot(const SessionOptions &o, int bit) {
    sqot::RandomSource rng(o.seed);
    auto params = sqot::agree_session(o.k, o.n, rng, o.alpha);
    auto transfer = sqot::single_bit_ot_alice(static_cast<uint8_t>(bit), params, rng);
    auto opening = sqot::alice_open(transfer.record);
    auto outcome = sqot::bob_open(transfer.cipher, opening, params, rng);
    auto t = session_transcript("single-bit-ot", o, params, transfer.cipher, opening, outcome);
    t.bit = sqot::single_bit_ot_bob(outcome);
    emit(o, sqot::write_transcript(t));
    return exit_pass;
}

int run_pubkey(const SessionOptions &o) {
    sqot::RandomSource rng(o.seed);
    auto pair = sqot::keygen(o.k, o.n, rng);
    auto message = message_or_random(o, o.k, rng);
    sqot::SessionTranscript t;
    t.protocol = "pubkey";
    t.trial_seed = o.seed;
    t.k = o.k;
    t.n = o.n;
    t.alpha = o.alpha;
    t.cipher = sqot::encrypt(message, std::move(pair.pub));
    t.opening = {pair.secret, pair.secret.n};
    t.decrypted = sqot::decrypt(t.cipher, pair.secret, rng);
    emit(o, sqot::write_transcript(t));
    return exit_pass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-qubit-rotation oblivious transfer simulator"};
    app.require_subcommand(1);

    SessionOptions ot_opts, bit_opts, pk_opts;
    auto *ot = app.add_subcommand("run-ot", "Run one bit-string OT session and print its transcript");
    add_session_options(ot, ot_opts);

    auto *bit_ot = app.add_subcommand("run-bit-ot", "Run one single-bit OT session");
    add_session_options(bit_ot, bit_opts);
    int bit = 0;
    bit_ot->add_option("--bit", bit, "Bit to transfer")->check(CLI::Range(0, 1));

    auto *pk = app.add_subcommand("run-pubkey", "Encrypt and decrypt one message with the public-key scheme");
    add_session_options(pk, pk_opts);

    auto *exp = app.add_subcommand("experiment", "Run a Monte-Carlo experiment and report pass/fail");
    std::string name;
    std::optional<size_t> k, trials;
    std::optional<unsigned> n, threads;
    std::optional<uint64_t> seed;
    std::optional<double> alpha;
    std::string format = "json", out, transcripts;
    std::string names;
    for (auto e : sqot::all_experiments()) {
        names += (names.empty() ? "" : ", ") + sqot::to_string(e);
    }
    exp->add_option("name", name, "One of: " + names)->required();
    exp->add_option("--k", k, "Message length in bits");
    exp->add_option("--n", n, "Security parameter");
    exp->add_option("--trials", trials, "Number of trials");
    exp->add_option("--seed", seed, "Master seed");
    exp->add_option("--alpha", alpha, "Significance level");
    exp->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", out, "Report path; stdout when omitted");
    exp->add_option("--transcripts", transcripts, "Directory for per-session transcripts");
    exp->add_option("--threads", threads, "Worker threads (does not change results)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*ot) {
            return run_ot(ot_opts);
        }
        if (*bit_ot) {
            return run_bit_ot(bit_opts, bit);
        }
        if (*pk) {
            return run_pubkey(pk_opts);
        }
        auto which = sqot::parse_experiment(name);
        if (!which) {
            std::cerr << "unknown experiment '" << name << "'; expected one of: " << names << "\n";
            return exit_usage;
        }
        auto config = sqot::default_config(*which);
        if (k) config.k = *k;
        if (n) config.n = *n;
        if (trials) config.trials = *trials;
        if (seed) config.master_seed = *seed;
        if (alpha) config.alpha = *alpha;
        if (threads) config.threads = *threads;
        config.format = format == "csv" ? sqot::ReportFormat::csv : sqot::ReportFormat::json;
        config.output_path = out;
        config.transcripts_dir = transcripts;

        auto report = sqot::run_experiment(config);
        if (out.empty()) {
            if (config.format == sqot::ReportFormat::csv) {
                std::cout << sqot::report_to_csv(report);
            } else {
                std::cout << sqot::report_to_json(report).dump(2) << "\n";
            }
        } else {
            sqot::write_report(report);
        }
        return report.pass ? exit_pass : exit_statistical_fail;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
