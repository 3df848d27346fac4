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

#include "qsync/qsync_c.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qsync/descriptor.h"
#include "qsync/errors.h"
#include "qsync/experiments.h"
#include "qsync/statevector.h"

struct qsync_code {
    qsync::QsyncCode code;
};

using namespace qsync;

namespace {

thread_local std::string last_error;

qsync_error fail(qsync_error code, const std::string &message) {
    last_error = message;
    return code;
}

template <typename Body>
qsync_error guarded(Body &&body) {
    try {
        body();
        last_error.clear();
        return QSYNC_OK;
    } catch (const PreconditionViolation &e) {
        return fail(QSYNC_ERR_PRECONDITION, e.what());
    } catch (const BudgetExceeded &e) {
        return fail(QSYNC_ERR_BUDGET, e.what());
    } catch (const InvalidInput &e) {
        return fail(QSYNC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QSYNC_ERR_BUDGET, "out of memory");
    } catch (const std::exception &e) {
        return fail(QSYNC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QSYNC_ERR_INTERNAL, "unknown exception");
    }
}

void require(const void *p, const char *name) {
    if (p == nullptr) {
        throw InvalidInput(std::string(name) + " must not be NULL");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void maybe_out(char **slot, const std::string &s) {
    if (slot != nullptr) {
        *slot = dup_string(s);
    }
}

qsync_code *wrap(QsyncCode code) {
    return new qsync_code{std::move(code)};
}

ExhaustiveConfig sweep_from_c(const qsync_sweep_config *c) {
    ExhaustiveConfig out;
    out.min_bit_weight = c->min_bit_weight;
    out.max_bit_weight = c->max_bit_weight;
    out.min_phase_weight = c->min_phase_weight;
    out.max_phase_weight = c->max_phase_weight;
    if (c->has_slip_range) {
        out.slip_lo = c->slip_lo;
        out.slip_hi = c->slip_hi;
    }
    out.max_branch_bits = c->max_branch_bits;
    out.sampled_branches = c->sampled_branches;
    out.seed = c->seed;
    out.budget = c->budget;
    out.threads = c->threads;
    return out;
}

BitVec positions_to_bits(size_t len, const size_t *positions, size_t count, const char *name) {
    BitVec out(len);
    if (count > 0) {
        require(positions, name);
    }
    for (size_t i = 0; i < count; i++) {
        if (positions[i] >= len) {
            throw InvalidInput(std::string(name) + " entry " + std::to_string(positions[i]) + " is outside the " + std::to_string(len) +
                               "-qubit block");
        }
        out.flip(positions[i]);
    }
    return out;
}

}  // namespace

extern "C" {

const char *qsync_version(void) {
    return "1.0.0";
}

const char *qsync_rng_algorithm(void) {
    return RNG_ALGORITHM;
}

const char *qsync_last_error_message(void) {
    return last_error.c_str();
}

const char *qsync_status_name(int status) {
    if (status < 0 || status >= static_cast<int>(NUM_DECODE_STATUSES)) {
        return "unknown";
    }
    return status_name(static_cast<DecodeStatus>(status));
}

void qsync_string_free(char *s) {
    std::free(s);
}

qsync_error qsync_code_from_bch(unsigned m, unsigned d1, unsigned d2, int64_t a_l, int64_t a_r, qsync_code **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(QsyncCode::build(bch_code(m, d1), bch_code(m, d2), a_l, a_r));
    });
}

qsync_error qsync_code_from_generators(size_t n, const char *g_c, const char *g_d, int64_t a_l, int64_t a_r, qsync_code **out) {
    return guarded([&] {
        require(out, "out");
        require(g_c, "g_c");
        require(g_d, "g_d");
        CyclicCode c = CyclicCode::from_generator(n, BitPoly::parse(g_c));
        CyclicCode d = CyclicCode::from_generator(n, BitPoly::parse(g_d));
        *out = wrap(QsyncCode::build(c, d, a_l, a_r));
    });
}

qsync_error qsync_code_from_descriptor(const char *json, qsync_code **out) {
    return guarded([&] {
        require(out, "out");
        require(json, "json");
        *out = wrap(parse_descriptor(json));
    });
}

qsync_error qsync_code_load(const char *path, qsync_code **out) {
    return guarded([&] {
        require(out, "out");
        require(path, "path");
        *out = wrap(load_descriptor(path));
    });
}

qsync_error qsync_code_save(const qsync_code *code, const char *path) {
    return guarded([&] {
        require(code, "code");
        require(path, "path");
        save_descriptor(code->code, path);
    });
}

void qsync_code_free(qsync_code *code) {
    delete code;
}

qsync_error qsync_code_get_info(const qsync_code *code, qsync_code_info *out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        const QsyncCode &q = code->code;
        *out = qsync_code_info{
            q.n(),
            q.k1(),
            q.k2(),
            q.d1(),
            q.d2(),
            q.c().distance()->kind == Distance::Kind::computed,
            q.d().distance()->kind == Distance::Kind::computed,
            q.a_l(),
            q.a_r(),
            q.n_ext(),
            q.k_logical(),
            q.phase_radius(),
            q.bit_radius(),
            q.sync_table().size(),
        };
    });
}

qsync_error qsync_code_descriptor(const qsync_code *code, char **json_out) {
    return guarded([&] {
        require(code, "code");
        require(json_out, "json_out");
        *json_out = dup_string(descriptor_json(code->code));
    });
}

qsync_error qsync_code_hash(const qsync_code *code, char **hex_out) {
    return guarded([&] {
        require(code, "code");
        require(hex_out, "hex_out");
        *hex_out = dup_string(hex64(descriptor_hash(code->code)));
    });
}

qsync_error qsync_code_sync_entry(const qsync_code *code, size_t index, int64_t *slip_out, char **remainder_out) {
    return guarded([&] {
        require(code, "code");
        const auto &table = code->code.sync_table();
        if (index >= table.size()) {
            throw InvalidInput("sync table index " + std::to_string(index) + " out of range");
        }
        if (slip_out != nullptr) {
            *slip_out = table[index].first;
        }
        maybe_out(remainder_out, table[index].second.pretty());
    });
}

qsync_error qsync_code_polynomials(const qsync_code *code, char **g_c, char **g_d, char **f) {
    return guarded([&] {
        require(code, "code");
        maybe_out(g_c, code->code.c().generator().pretty());
        maybe_out(g_d, code->code.d().generator().pretty());
        maybe_out(f, code->code.f().pretty());
    });
}

qsync_error qsync_run_trial(const qsync_code *code, uint64_t logical_index, int64_t slip, const size_t *bit_positions,
                            size_t num_bit_positions, const size_t *phase_positions, size_t num_phase_positions, uint64_t branch_seed,
                            int with_oracle, qsync_trial_result *out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        const QsyncCode &q = code->code;
        if (q.k_logical() < 64 && logical_index >= (uint64_t{1} << q.k_logical())) {
            throw InvalidInput("logical index must be below 2^k_logical");
        }
        if (slip < min_simulable_slip(q) || slip > max_simulable_slip(q)) {
            throw InvalidInput("slip " + std::to_string(slip) + " outside the simulable range [" + std::to_string(min_simulable_slip(q)) +
                               ", " + std::to_string(max_simulable_slip(q)) + "]");
        }
        ChannelEffect effect{positions_to_bits(q.n_ext(), bit_positions, num_bit_positions, "bit_positions"),
                             positions_to_bits(q.n_ext(), phase_positions, num_phase_positions, "phase_positions"), slip};
        DecodeReport report = run_pipeline(q, logical_index, effect, branch_seed);
        out->status = static_cast<int>(report.status);
        out->has_slip_estimate = report.slip_estimate.has_value();
        out->slip_estimate = report.slip_estimate.value_or(0);
        out->bit_correction_weight = report.total_bit_correction.popcount();
        out->phase_correction_weight = report.phase_correction.popcount();
        out->fidelity = with_oracle ? oracle_fidelity(q, logical_index, effect, report) : -1.0;
    });
}

void qsync_sim_config_default(qsync_sim_config *config) {
    if (config != nullptr) {
        *config = qsync_sim_config{};
        config->noise = QSYNC_NOISE_IID;
        config->slip_policy = QSYNC_SLIP_UNIFORM;
    }
}

qsync_error qsync_simulate(const qsync_code *code, const qsync_sim_config *config, char **csv_out, char **summary_out,
                           double *success_rate_out) {
    return guarded([&] {
        require(code, "code");
        require(config, "config");
        SimulationConfig sim;
        sim.trials = config->trials;
        sim.seed = config->seed;
        sim.threads = config->threads;
        switch (config->noise) {
            case QSYNC_NOISE_IID:
                sim.channel.kind = NoiseKind::iid;
                break;
            case QSYNC_NOISE_FIXED_WEIGHT:
                sim.channel.kind = NoiseKind::fixed_weight;
                break;
            default:
                throw InvalidInput("unknown noise model " + std::to_string(config->noise));
        }
        sim.channel.p_bit = config->p_bit;
        sim.channel.p_phase = config->p_phase;
        sim.channel.bit_weight = config->bit_weight;
        sim.channel.phase_weight = config->phase_weight;
        sim.channel.clamped = config->clamped != 0;
        switch (config->slip_policy) {
            case QSYNC_SLIP_UNIFORM:
                sim.slip = SlipPolicy::uniform();
                break;
            case QSYNC_SLIP_FIXED:
                sim.slip = SlipPolicy::fixed(config->slip_lo);
                break;
            case QSYNC_SLIP_RANGE:
                sim.slip = SlipPolicy::range(config->slip_lo, config->slip_hi);
                break;
            default:
                throw InvalidInput("unknown slip policy " + std::to_string(config->slip_policy));
        }
        SimulationResult result = simulate(code->code, sim);
        std::string csv = csv_out ? trials_csv(result) : std::string();
        std::string summary = summary_out ? simulation_summary_json(code->code, sim, result) : std::string();
        if (success_rate_out != nullptr) {
            uint64_t ok = result.counts[static_cast<size_t>(DecodeStatus::success)] +
                          result.counts[static_cast<size_t>(DecodeStatus::degenerate_success)];
            *success_rate_out = sim.trials ? static_cast<double>(ok) / static_cast<double>(sim.trials) : 0.0;
        }
        maybe_out(csv_out, csv);
        maybe_out(summary_out, summary);
    });
}

void qsync_sweep_config_default(qsync_sweep_config *config) {
    if (config == nullptr) {
        return;
    }
    ExhaustiveConfig d;
    *config = qsync_sweep_config{};
    config->max_branch_bits = d.max_branch_bits;
    config->sampled_branches = d.sampled_branches;
    config->budget = d.budget;
}

qsync_error qsync_exhaustive(const qsync_code *code, const qsync_sweep_config *config, char **report_out, uint64_t *violations_out,
                             double *non_success_fraction_out) {
    return guarded([&] {
        require(code, "code");
        require(config, "config");
        ExhaustiveConfig sweep = sweep_from_c(config);
        ExhaustiveReport report = run_exhaustive(code->code, sweep);
        if (violations_out != nullptr) {
            *violations_out = report.violation_count;
        }
        if (non_success_fraction_out != nullptr) {
            *non_success_fraction_out = report.non_success_fraction();
        }
        maybe_out(report_out, exhaustive_report_json(code->code, sweep, report));
    });
}

qsync_error qsync_oracle(const qsync_code *code, const qsync_sweep_config *config, int negative_controls, char **report_out,
                         int *agrees_out, double *max_success_deviation_out) {
    return guarded([&] {
        require(code, "code");
        require(config, "config");
        OracleConfig oracle;
        oracle.sweep = sweep_from_c(config);
        oracle.negative_controls = negative_controls != 0;
        OracleReport report = run_oracle(code->code, oracle);
        if (agrees_out != nullptr) {
            *agrees_out = report.agrees();
        }
        if (max_success_deviation_out != nullptr) {
            *max_success_deviation_out = report.max_success_deviation;
        }
        maybe_out(report_out, oracle_report_json(code->code, oracle, report));
    });
}

}  // extern "C"
