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

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "qsync/qsync_c.h"

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    qsync_string_free(s);
    return out;
}

qsync_code *make40() {
    qsync_code *code = nullptr;
    REQUIRE(qsync_code_from_bch(5, 7, 3, 4, 5, &code) == QSYNC_OK);
    return code;
}

}  // namespace

TEST_CASE("library identity") {
    CHECK(std::strlen(qsync_version()) > 0);
    CHECK(std::string(qsync_rng_algorithm()) == "mt19937_64/splitmix64-v1");
    CHECK(std::string(qsync_status_name(QSYNC_STATUS_PHASE_FAILURE)) == "phase_failure");
    CHECK(std::string(qsync_status_name(99)) == "unknown");
}

TEST_CASE("code info for the (4,5) BCH pair") {
    qsync_code *code = make40();
    qsync_code_info info;
    REQUIRE(qsync_code_get_info(code, &info) == QSYNC_OK);
    CHECK(info.n == 31);
    CHECK(info.k1 == 16);
    CHECK(info.k2 == 26);
    CHECK(info.d1 == 7);
    CHECK(info.d2 == 3);
    CHECK(info.d1_computed == 1);
    CHECK(info.n_ext == 40);
    CHECK(info.k_logical == 1);
    CHECK(info.phase_radius == 3);
    CHECK(info.bit_radius == 1);
    CHECK(info.sync_table_size == 10);

    int64_t slip = 0;
    char *rem = nullptr;
    REQUIRE(qsync_code_sync_entry(code, 0, &slip, &rem) == QSYNC_OK);
    CHECK(slip == -4);
    CHECK(take(rem) == "x^4");
    CHECK(qsync_code_sync_entry(code, 10, &slip, &rem) == QSYNC_ERR_INVALID_ARGUMENT);

    char *f = nullptr;
    REQUIRE(qsync_code_polynomials(code, nullptr, nullptr, &f) == QSYNC_OK);
    CHECK(take(f) == "x^10+x^7+x^6+x+1");

    char *hash = nullptr;
    REQUIRE(qsync_code_hash(code, &hash) == QSYNC_OK);
    CHECK(take(hash).size() == 16);
    qsync_code_free(code);
}

TEST_CASE("errors carry codes and messages") {
    qsync_code *code = nullptr;
    CHECK(qsync_code_from_bch(5, 7, 3, 5, 5, &code) == QSYNC_ERR_PRECONDITION);
    CHECK(code == nullptr);
    CHECK(std::string(qsync_last_error_message()).find("a_l + a_r < k2 - k1") != std::string::npos);
    CHECK(qsync_code_from_generators(8, "x+1", "1", 0, 0, &code) == QSYNC_ERR_INVALID_ARGUMENT);
    CHECK(qsync_code_from_generators(7, "x^3+x+1", "not a polynomial", 1, 1, &code) == QSYNC_ERR_INVALID_ARGUMENT);
    CHECK(qsync_code_from_descriptor("{", &code) == QSYNC_ERR_INVALID_ARGUMENT);
    CHECK(qsync_code_load("/nonexistent/descriptor.json", &code) != QSYNC_OK);
    CHECK(qsync_code_get_info(nullptr, nullptr) == QSYNC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("descriptor round trip through the C API") {
    qsync_code *code = make40();
    char *json = nullptr;
    REQUIRE(qsync_code_descriptor(code, &json) == QSYNC_OK);
    std::string text = take(json);
    qsync_code *back = nullptr;
    REQUIRE(qsync_code_from_descriptor(text.c_str(), &back) == QSYNC_OK);
    char *again = nullptr;
    REQUIRE(qsync_code_descriptor(back, &again) == QSYNC_OK);
    CHECK(take(again) == text);

    std::string path = (std::filesystem::temp_directory_path() / "qsync_c_api_descriptor.json").string();
    REQUIRE(qsync_code_save(code, path.c_str()) == QSYNC_OK);
    qsync_code *loaded = nullptr;
    REQUIRE(qsync_code_load(path.c_str(), &loaded) == QSYNC_OK);
    std::remove(path.c_str());
    qsync_code_free(loaded);
    qsync_code_free(back);
    qsync_code_free(code);
}

TEST_CASE("single trials with and without the oracle") {
    qsync_code *code = nullptr;
    REQUIRE(qsync_code_from_generators(7, "x^3+x+1", "1", 1, 1, &code) == QSYNC_OK);
    size_t phase[] = {4};
    qsync_trial_result r;
    REQUIRE(qsync_run_trial(code, 1, -1, nullptr, 0, phase, 1, 3, 1, &r) == QSYNC_OK);
    CHECK(r.status == QSYNC_STATUS_SUCCESS);
    CHECK(r.has_slip_estimate == 1);
    CHECK(r.slip_estimate == -1);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));

    size_t two[] = {2, 5};
    REQUIRE(qsync_run_trial(code, 0, 0, nullptr, 0, two, 2, 3, 0, &r) == QSYNC_OK);
    CHECK(r.status == QSYNC_STATUS_PHASE_FAILURE);
    CHECK(r.fidelity == -1.0);

    size_t outside[] = {9};
    CHECK(qsync_run_trial(code, 0, 0, outside, 1, nullptr, 0, 3, 0, &r) == QSYNC_ERR_INVALID_ARGUMENT);
    qsync_code_free(code);

    qsync_code *big = make40();
    CHECK(qsync_run_trial(big, 0, 0, nullptr, 0, nullptr, 0, 3, 1, &r) == QSYNC_ERR_BUDGET);
    qsync_code_free(big);
}

TEST_CASE("simulation and sweeps") {
    qsync_code *code = make40();
    qsync_sim_config cfg;
    qsync_sim_config_default(&cfg);
    cfg.trials = 200;
    cfg.seed = 7;
    cfg.p_bit = 0.01;
    cfg.p_phase = 0.01;
    cfg.clamped = 1;
    char *csv = nullptr;
    char *summary = nullptr;
    double rate = 0;
    REQUIRE(qsync_simulate(code, &cfg, &csv, &summary, &rate) == QSYNC_OK);
    CHECK(rate == 1.0);
    CHECK(take(csv).rfind("trial_id,", 0) == 0);
    CHECK(take(summary).find("\"success_rate\": 1.0") != std::string::npos);

    cfg.slip_policy = QSYNC_SLIP_RANGE;
    cfg.slip_lo = -40;
    cfg.slip_hi = 0;
    CHECK(qsync_simulate(code, &cfg, nullptr, nullptr, &rate) == QSYNC_ERR_INVALID_ARGUMENT);

    qsync_sweep_config sweep;
    qsync_sweep_config_default(&sweep);
    sweep.max_bit_weight = 3;
    sweep.max_phase_weight = 3;
    uint64_t violations = 1;
    double fraction = 0;
    CHECK(qsync_exhaustive(code, &sweep, nullptr, &violations, &fraction) == QSYNC_ERR_BUDGET);
    qsync_code_free(code);

    REQUIRE(qsync_code_from_generators(7, "x^3+x+1", "1", 1, 1, &code) == QSYNC_OK);
    qsync_sweep_config_default(&sweep);
    sweep.max_phase_weight = 1;
    REQUIRE(qsync_exhaustive(code, &sweep, nullptr, &violations, &fraction) == QSYNC_OK);
    CHECK(violations == 0);
    CHECK(fraction == 0.0);
    int agrees = 0;
    double deviation = 1;
    char *report = nullptr;
    REQUIRE(qsync_oracle(code, &sweep, 1, &report, &agrees, &deviation) == QSYNC_OK);
    CHECK(agrees == 1);
    CHECK(deviation < 1e-9);
    CHECK(take(report).find("\"agrees\"") != std::string::npos);
    qsync_code_free(code);
}
