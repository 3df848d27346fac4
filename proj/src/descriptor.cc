// Copyright 2026 The qsync Authors
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

#include "qsync/descriptor.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsync/errors.h"

using namespace qsync;
using nlohmann::json;

namespace {

json cyclic_json(const CyclicCode &code) {
    json out = {
        {"n", code.n()},
        {"k", code.k()},
        {"generator_hex", code.generator().hex()},
        {"generator_pretty", code.generator().pretty()},
    };
    if (code.distance()) {
        out["distance"] = {{"value", code.distance()->value}, {"kind", distance_kind_name(code.distance()->kind)}};
    }
    return out;
}

json qsync_json(const QsyncCode &code) {
    json table = json::array();
    for (const auto &[a, remainder] : code.sync_table()) {
        table.push_back({{"a", a}, {"remainder_hex", remainder.hex()}});
    }
    return {
        {"C", cyclic_json(code.c())},
        {"D", cyclic_json(code.d())},
        {"f_hex", code.f().hex()},
        {"a_l", code.a_l()},
        {"a_r", code.a_r()},
        {"n_ext", code.n_ext()},
        {"k_logical", code.k_logical()},
        {"sync_table", table},
    };
}

void mismatch(const std::string &field) {
    throw InvalidInput("descriptor field '" + field + "' disagrees with the rebuilt code");
}

CyclicCode cyclic_from_json(const json &j, const std::string &label) {
    auto n = j.at("n").get<size_t>();
    std::string hex = j.at("generator_hex").get<std::string>();
    CyclicCode code = CyclicCode::from_generator(n, BitPoly::from_hex(hex));
    if (j.contains("generator_pretty") && BitPoly::from_pretty(j.at("generator_pretty").get<std::string>()) != code.generator()) {
        mismatch(label + ".generator_pretty");
    }
    if (j.contains("k") && j.at("k").get<size_t>() != code.k()) {
        mismatch(label + ".k");
    }
    return code;
}

void check_distance(const json &j, const CyclicCode &rebuilt, const std::string &label) {
    if (!j.contains("distance")) {
        return;
    }
    const json &d = j.at("distance");
    auto value = d.at("value").get<size_t>();
    auto kind = d.at("kind").get<std::string>();
    if (kind != "computed" && kind != "designed") {
        throw InvalidInput(label + ".distance.kind must be 'computed' or 'designed'");
    }
    const Distance &actual = *rebuilt.distance();
    if (kind == "computed" && (actual.kind != Distance::Kind::computed || actual.value != value)) {
        mismatch(label + ".distance");
    }
    if (kind == "designed" && actual.kind == Distance::Kind::computed && actual.value < value) {
        mismatch(label + ".distance");
    }
}

}  // namespace

std::string qsync::code_descriptor_json(const CyclicCode &code) {
    return cyclic_json(code).dump(2) + "\n";
}

std::string qsync::descriptor_json(const QsyncCode &code) {
    return qsync_json(code).dump(2) + "\n";
}

QsyncCode qsync::parse_descriptor(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("descriptor is not valid JSON: ") + e.what());
    }
    try {
        CyclicCode c = cyclic_from_json(j.at("C"), "C");
        CyclicCode d = cyclic_from_json(j.at("D"), "D");
        QsyncCode code = QsyncCode::build(c, d, j.at("a_l").get<int64_t>(), j.at("a_r").get<int64_t>());
        check_distance(j.at("C"), code.c(), "C");
        check_distance(j.at("D"), code.d(), "D");
        if (j.contains("f_hex") && BitPoly::from_hex(j.at("f_hex").get<std::string>()) != code.f()) {
            mismatch("f_hex");
        }
        if (j.contains("n_ext") && j.at("n_ext").get<size_t>() != code.n_ext()) {
            mismatch("n_ext");
        }
        if (j.contains("k_logical") && j.at("k_logical").get<size_t>() != code.k_logical()) {
            mismatch("k_logical");
        }
        if (j.contains("sync_table")) {
            const json &table = j.at("sync_table");
            if (!table.is_array() || table.size() != code.sync_table().size()) {
                mismatch("sync_table");
            }
            for (size_t i = 0; i < table.size(); i++) {
                const auto &[a, remainder] = code.sync_table()[i];
                if (table[i].at("a").get<int64_t>() != a ||
                    BitPoly::from_hex(table[i].at("remainder_hex").get<std::string>()) != remainder) {
                    mismatch("sync_table");
                }
            }
        }
        return code;
    } catch (const json::exception &e) {
        throw InvalidInput(std::string("descriptor has a missing or mistyped field: ") + e.what());
    }
}

QsyncCode qsync::load_descriptor(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read descriptor '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_descriptor(buffer.str());
}

void qsync::save_descriptor(const QsyncCode &code, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write descriptor '" + path + "'");
    }
    out << descriptor_json(code);
}

uint64_t qsync::descriptor_hash(const QsyncCode &code) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : descriptor_json(code)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string qsync::hex64(uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}
