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

#include "sqot/transcript.hpp"

#include <cstdio>
#include <stdexcept>

namespace sqot {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_amplitude(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ordered_json hash_to_json(const HashFunctionGF2 &h) {
    ordered_json j;
    j["k"] = h.input_bits();
    j["rows"] = h.rows_hex();
    j["offset"] = h.offset_hex();
    return j;
}

HashFunctionGF2 hash_from_json(const json &j) {
    return HashFunctionGF2::from_hex(j.at("k").get<size_t>(), j.at("rows").get<std::vector<std::string>>(),
                                     j.at("offset").get<std::string>());
}

ordered_json opening_to_json(const OpeningMessage &opening) {
    ordered_json j;
    j["n"] = opening.n;
    j["key"] = opening.key.s;
    return j;
}

OpeningMessage opening_from_json(const json &j) {
    OpeningMessage o;
    o.n = j.at("n").get<unsigned>();
    o.key = SecretKey{j.at("key").get<std::vector<uint64_t>>(), o.n};
    o.key.validate();
    return o;
}

namespace {

constexpr std::string_view cipher_placeholder = "\"@@cipher@@\"";

std::string cipher_text(const CipherState &cipher) {
    std::string out = "[";
    for (size_t i = 0; i < cipher.qubits.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += "[" + format_amplitude(cipher.qubits[i].amp0) + ", " + format_amplitude(cipher.qubits[i].amp1) + "]";
    }
    return out + "]";
}

}  // namespace

std::string write_transcript(const SessionTranscript &t) {
    ordered_json j;
    j["schema_version"] = transcript_schema_version;
    j["protocol"] = t.protocol;
    j["trial_index"] = t.trial_index;
    j["trial_seed"] = t.trial_seed;
    ordered_json params;
    params["k"] = t.k;
    params["n"] = t.n;
    params["alpha"] = t.alpha;
    if (t.hash) {
        params["hash"] = hash_to_json(*t.hash);
    }
    j["params"] = params;
    j["cipher"] = "@@cipher@@";
    j["opening"] = opening_to_json(t.opening);
    if (t.outcome) {
        ordered_json o;
        if (const auto *r = std::get_if<Received>(&*t.outcome)) {
            o["status"] = "received";
            o["message"] = format_bits(r->message);
        } else {
            o["status"] = "rejected";
            o["reason"] = to_string(std::get<Rejected>(*t.outcome).reason);
        }
        j["outcome"] = o;
    } else if (t.decrypted) {
        j["outcome"] = ordered_json{{"status", "decrypted"}, {"message", format_bits(*t.decrypted)}};
    }
    if (t.protocol == "single-bit-ot") {
        j["bit"] = t.bit ? ordered_json(*t.bit) : ordered_json(nullptr);
    }
    std::string text = j.dump(2);
    auto pos = text.find(cipher_placeholder);
    text.replace(pos, cipher_placeholder.size(), cipher_text(t.cipher));
    return text + "\n";
}

SessionTranscript read_transcript(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("transcript: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != transcript_schema_version) {
            throw std::invalid_argument("transcript: unsupported schema_version");
        }
        SessionTranscript t;
        t.protocol = j.at("protocol").get<std::string>();
        t.trial_index = j.at("trial_index").get<uint64_t>();
        t.trial_seed = j.at("trial_seed").get<uint64_t>();
        const auto &p = j.at("params");
        t.k = p.at("k").get<size_t>();
        t.n = p.at("n").get<unsigned>();
        t.alpha = p.at("alpha").get<double>();
        if (p.contains("hash")) {
            t.hash = hash_from_json(p.at("hash"));
        }
        for (const auto &pair : j.at("cipher")) {
            if (pair.size() != 2) {
                throw std::invalid_argument("transcript: cipher entries must be amplitude pairs");
            }
            t.cipher.qubits.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        t.opening = opening_from_json(j.at("opening"));
        if (j.contains("outcome")) {
            const auto &o = j.at("outcome");
            auto status = o.at("status").get<std::string>();
            if (status == "received") {
                t.outcome = Received{parse_bits(o.at("message").get<std::string>())};
            } else if (status == "rejected") {
                auto reason = o.at("reason").get<std::string>();
                if (reason == "key-not-random") {
                    t.outcome = Rejected{RejectReason::key_not_random};
                } else if (reason == "digest-mismatch") {
                    t.outcome = Rejected{RejectReason::digest_mismatch};
                } else {
                    throw std::invalid_argument("transcript: unknown reject reason " + reason);
                }
            } else if (status == "decrypted") {
                t.decrypted = parse_bits(o.at("message").get<std::string>());
            } else {
                throw std::invalid_argument("transcript: unknown outcome status " + status);
            }
        }
        if (j.contains("bit") && !j.at("bit").is_null()) {
            t.bit = j.at("bit").get<uint8_t>();
        }
        return t;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("transcript: ") + e.what());
    }
}

}  // namespace sqot
