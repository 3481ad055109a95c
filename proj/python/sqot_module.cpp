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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqot/adversary.hpp"
#include "sqot/harness.hpp"
#include "sqot/protocol.hpp"
#include "sqot/pubkey.hpp"
#include "sqot/randomness.hpp"
#include "sqot/transcript.hpp"

namespace py = pybind11;
using namespace sqot;

namespace {

// Bit strings cross the boundary as "0101..." text.
std::string to_py(const BitString &b) {
    return format_bits(b);
}

BitString from_py(const std::string &s) {
    return parse_bits(s);
}

std::vector<std::pair<double, double>> amplitudes(const CipherState &c) {
    std::vector<std::pair<double, double>> out;
    out.reserve(c.qubits.size());
    for (const auto &q : c.qubits) {
        out.emplace_back(q.amp0, q.amp1);
    }
    return out;
}

CipherState cipher_from(const std::vector<std::pair<double, double>> &amps) {
    CipherState c;
    for (auto [a0, a1] : amps) {
        c.qubits.push_back({a0, a1});
    }
    return c;
}

py::dict outcome_dict(const BobOutcome &o) {
    py::dict d;
    if (const auto *r = std::get_if<Received>(&o)) {
        d["status"] = "received";
        d["message"] = to_py(r->message);
    } else {
        d["status"] = "rejected";
        d["reason"] = to_string(std::get<Rejected>(o).reason);
    }
    return d;
}

py::object json_to_py(const nlohmann::ordered_json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

ExperimentConfig make_config(const std::string &name, std::optional<size_t> k, std::optional<unsigned> n,
                             std::optional<size_t> trials, std::optional<uint64_t> seed,
                             std::optional<double> alpha, unsigned threads) {
    auto e = parse_experiment(name);
    if (!e) {
        throw py::value_error("unknown experiment '" + name + "'");
    }
    auto c = default_config(*e);
    if (k) c.k = *k;
    if (n) c.n = *n;
    if (trials) c.trials = *trials;
    if (seed) c.master_seed = *seed;
    if (alpha) c.alpha = *alpha;
    c.threads = threads;
    return c;
}

}  // namespace

PYBIND11_MODULE(_sqot, m) {
    m.doc() = "Oblivious transfer with single-qubit rotations: core bindings";

    py::register_exception<ProtocolViolation>(m, "ProtocolViolation", PyExc_RuntimeError);

    py::class_<RandomSource>(m, "RandomSource")
        .def(py::init<uint64_t>(), py::arg("seed"))
        .def("next_u64", &RandomSource::next_u64)
        .def("uniform01", &RandomSource::uniform01)
        .def("bit", &RandomSource::bit)
        .def("uniform_below", &RandomSource::uniform_below, py::arg("bound"));
    m.def("derive_trial_seed", &derive_trial_seed, py::arg("master_seed"), py::arg("index"));

    m.def(
        "encode_bit",
        [](uint8_t bit, uint64_t s, uint8_t direction, unsigned n) {
            auto q = encode_bit(bit, s, direction, n);
            return std::make_pair(q.amp0, q.amp1);
        },
        py::arg("bit"), py::arg("s"), py::arg("direction"), py::arg("n"));
    m.def("helstrom_probability", &helstrom_probability, py::arg("s"), py::arg("n"));

    py::class_<SecretKey>(m, "SecretKey")
        .def(py::init([](std::vector<uint64_t> s, unsigned n) { return SecretKey{std::move(s), n}; }),
             py::arg("s"), py::arg("n"))
        .def_readonly("s", &SecretKey::s)
        .def_readonly("n", &SecretKey::n)
        .def("__eq__", [](const SecretKey &a, const SecretKey &b) { return a == b; })
        .def("__repr__", [](const SecretKey &k) { return "SecretKey(n=" + std::to_string(k.n) + ", len=" +
                                                         std::to_string(k.s.size()) + ")"; });
    m.def("sample_key", &sample_key, py::arg("length"), py::arg("n"), py::arg("rng"));

    py::class_<HashFunctionGF2>(m, "HashFunction")
        .def_property_readonly("input_bits", &HashFunctionGF2::input_bits)
        .def_property_readonly("output_bits", &HashFunctionGF2::output_bits)
        .def_property_readonly("rows_hex", &HashFunctionGF2::rows_hex)
        .def_property_readonly("offset_hex", &HashFunctionGF2::offset_hex)
        .def("rank", &HashFunctionGF2::rank)
        .def("__call__", [](const HashFunctionGF2 &h, const std::string &x) { return to_py(h(from_py(x))); })
        .def_static("from_hex", &HashFunctionGF2::from_hex, py::arg("k"), py::arg("rows"), py::arg("offset"));
    m.def("sample_hash", &sample_hash, py::arg("k"), py::arg("rng"));

    m.def(
        "assess_randomness",
        [](const std::string &bits, double alpha) {
            auto v = assess_randomness(from_py(bits), alpha);
            py::dict d;
            d["chi_square_applicable"] = v.chi_square_applicable;
            d["chi_square_width"] = v.chi_square_width;
            d["chi_square_statistic"] = v.chi_square_statistic;
            d["chi_square_pass"] = v.chi_square_pass;
            d["serial_applicable"] = v.serial_applicable;
            d["serial_correlation"] = v.serial_correlation;
            d["serial_pass"] = v.serial_pass;
            d["overall_pass"] = v.overall_pass;
            return d;
        },
        py::arg("bits"), py::arg("alpha") = 0.01);
    m.def(
        "key_to_bits", [](const SecretKey &key) { return to_py(key_to_bits(key)); }, py::arg("key"));

    py::class_<SessionParams>(m, "SessionParams")
        .def_readonly("k", &SessionParams::k)
        .def_readonly("n", &SessionParams::n)
        .def_readonly("alpha", &SessionParams::alpha)
        .def_readonly("hash", &SessionParams::hash)
        .def_property_readonly("register_size", &SessionParams::register_size);
    m.def("agree_session", &agree_session, py::arg("k"), py::arg("n"), py::arg("rng"), py::arg("alpha") = 0.01);

    py::class_<Transfer>(m, "Transfer")
        .def_property_readonly("cipher", [](const Transfer &t) { return amplitudes(t.cipher); })
        .def_property_readonly("key", [](const Transfer &t) { return t.record.key; })
        .def_property_readonly("direction", [](const Transfer &t) { return t.record.direction; })
        .def_property_readonly("message", [](const Transfer &t) { return to_py(t.record.message); });
    m.def(
        "alice_transfer",
        [](const std::string &message, const SessionParams &params, RandomSource &rng) {
            return alice_transfer(from_py(message), params, rng);
        },
        py::arg("message"), py::arg("params"), py::arg("rng"));
    m.def(
        "bob_open",
        [](const std::vector<std::pair<double, double>> &cipher, const SecretKey &key, const SessionParams &params,
           RandomSource &rng, std::optional<uint8_t> direction) {
            OpeningMessage opening{key, key.n};
            auto c = cipher_from(cipher);
            return outcome_dict(direction ? bob_open_with_direction(c, opening, params, *direction, rng)
                                          : bob_open(c, opening, params, rng));
        },
        py::arg("cipher"), py::arg("key"), py::arg("params"), py::arg("rng"), py::arg("direction") = py::none());
    m.def(
        "single_bit_ot",
        [](uint8_t b, const SessionParams &params, RandomSource &rng) -> std::optional<uint8_t> {
            auto t = single_bit_ot_alice(b, params, rng);
            return single_bit_ot_bob(bob_open(t.cipher, alice_open(t.record), params, rng));
        },
        py::arg("bit"), py::arg("params"), py::arg("rng"));

    m.def(
        "keygen",
        [](size_t k, unsigned n, RandomSource &rng) {
            auto pair = keygen(k, n, rng);
            return std::make_pair(pair.secret, amplitudes(CipherState{pair.pub.qubits}));
        },
        py::arg("k"), py::arg("n"), py::arg("rng"));
    m.def(
        "encrypt",
        [](const std::string &message, const SecretKey &secret) {
            return amplitudes(encrypt(from_py(message), public_key_for(secret)));
        },
        py::arg("message"), py::arg("secret"));
    m.def(
        "decrypt",
        [](const std::vector<std::pair<double, double>> &cipher, const SecretKey &secret, RandomSource &rng) {
            return to_py(decrypt(cipher_from(cipher), secret, rng));
        },
        py::arg("cipher"), py::arg("secret"), py::arg("rng"));

    m.def("is_critical_angle", &is_critical_angle, py::arg("s"), py::arg("n"));
    m.def(
        "count_critical_angles", [](const SecretKey &key) { return count_critical_angles(key).l; }, py::arg("key"));
    m.def("obliviousness_bound", &obliviousness_bound, py::arg("l"));

    m.def("experiment_names", [] {
        std::vector<std::string> names;
        for (auto e : all_experiments()) {
            names.push_back(to_string(e));
        }
        return names;
    });
    m.def(
        "run_experiment",
        [](const std::string &name, std::optional<size_t> k, std::optional<unsigned> n, std::optional<size_t> trials,
           std::optional<uint64_t> seed, std::optional<double> alpha, unsigned threads, bool include_wall_time) {
            auto config = make_config(name, k, n, trials, seed, alpha, threads);
            ExperimentReport report;
            {
                py::gil_scoped_release release;
                report = run_experiment(config);
            }
            return json_to_py(report_to_json(report, include_wall_time));
        },
        py::arg("name"), py::kw_only(), py::arg("k") = py::none(), py::arg("n") = py::none(),
        py::arg("trials") = py::none(), py::arg("seed") = py::none(), py::arg("alpha") = py::none(),
        py::arg("threads") = 1, py::arg("include_wall_time") = true);
}
