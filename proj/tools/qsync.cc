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
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsync/qsync_c.h"

namespace {

constexpr int EXIT_USAGE = 1;
constexpr int EXIT_CONTRACT = 2;
constexpr int EXIT_BUDGET = 3;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(qsync_error err) {
    switch (err) {
        case QSYNC_OK:
            return 0;
        case QSYNC_ERR_PRECONDITION:
            return EXIT_CONTRACT;
        case QSYNC_ERR_BUDGET:
            return EXIT_BUDGET;
        default:
            return EXIT_USAGE;
    }
}

void check(qsync_error err) {
    if (err != QSYNC_OK) {
        throw CliError{exit_code_for(err), qsync_last_error_message()};
    }
}

struct OwnedString {
    char *ptr = nullptr;
    ~OwnedString() {
        qsync_string_free(ptr);
    }
    std::string str() const {
        return ptr ? ptr : "";
    }
};

using CodeHandle = std::unique_ptr<qsync_code, decltype(&qsync_code_free)>;

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw CliError{EXIT_USAGE, "cannot write '" + path + "'"};
    }
}

struct CodeSource {
    std::string descriptor;
    std::optional<unsigned> m;
    std::optional<unsigned> d1;
    std::optional<unsigned> d2;
    std::optional<size_t> n;
    std::string gc;
    std::string gd;
    int64_t al = 0;
    int64_t ar = 0;

    void attach(CLI::App *app, bool allow_descriptor) {
        CLI::Option_group *group = app->add_option_group("code", "Code selection");
        if (allow_descriptor) {
            group->add_option("--code", descriptor, "Descriptor JSON written by 'construct'");
        }
        group->add_option("--m", m, "BCH field degree; length n = 2^m - 1");
        group->add_option("--d1", d1, "Designed distance of C");
        group->add_option("--d2", d2, "Designed distance of D");
        group->add_option("--n", n, "Code length for explicit generators");
        group->add_option("--gc", gc, "Generator of C, e.g. x^3+x+1 or 0x0b");
        group->add_option("--gd", gd, "Generator of D");
        group->add_option("--al", al, "Left slip tolerance a_l");
        group->add_option("--ar", ar, "Right slip tolerance a_r");
    }

    CodeHandle open() const {
        qsync_code *code = nullptr;
        bool bch = m || d1 || d2;
        bool explicit_gens = n || !gc.empty() || !gd.empty();
        int sources = !descriptor.empty() + bch + explicit_gens;
        if (sources != 1) {
            throw CliError{EXIT_USAGE, "choose exactly one of --code, BCH flags (--m --d1 --d2) or explicit generators (--n --gc --gd)"};
        }
        if (!descriptor.empty()) {
            check(qsync_code_load(descriptor.c_str(), &code));
        } else if (bch) {
            if (!m || !d1 || !d2) {
                throw CliError{EXIT_USAGE, "BCH construction needs --m, --d1 and --d2"};
            }
            check(qsync_code_from_bch(*m, *d1, *d2, al, ar, &code));
        } else {
            if (!n || gc.empty() || gd.empty()) {
                throw CliError{EXIT_USAGE, "explicit construction needs --n, --gc and --gd"};
            }
            check(qsync_code_from_generators(*n, gc.c_str(), gd.c_str(), al, ar, &code));
        }
        return CodeHandle(code, qsync_code_free);
    }
};

qsync_code_info info_of(const qsync_code *code) {
    qsync_code_info info;
    check(qsync_code_get_info(code, &info));
    return info;
}

void print_code_summary(const qsync_code *code) {
    qsync_code_info info = info_of(code);
    OwnedString gc, gd, f;
    check(qsync_code_polynomials(code, &gc.ptr, &gd.ptr, &f.ptr));
    std::printf("(%zu,%zu)-[[%zu,%zu]] synchronizable code\n", info.a_l, info.a_r, info.n_ext, info.k_logical);
    std::printf("  C = [%zu,%zu,%zu] (%s), g_C = %s\n", info.n, info.k1, info.d1, info.d1_computed ? "computed" : "designed", gc.ptr);
    std::printf("  D = [%zu,%zu,%zu] (%s), g_D = %s\n", info.n, info.k2, info.d2, info.d2_computed ? "computed" : "designed", gd.ptr);
    std::printf("  f = %s\n", f.ptr);
    std::printf("  slips -%zu..+%zu, sync table size %zu\n", info.a_l, info.a_r, info.sync_table_size);
    std::printf("  guaranteed radii: phase %zu per block, bit %zu per length-%zu window\n", info.phase_radius, info.bit_radius, info.n);
}

struct SweepFlags {
    size_t min_bit = 0;
    size_t max_bit = 0;
    size_t min_phase = 0;
    size_t max_phase = 0;
    std::vector<int64_t> slip_range;
    uint64_t seed = 0;
    double budget = 0;
    size_t branch_bits = 0;
    size_t branch_samples = 0;
    size_t threads = 0;
    std::string report = "-";

    void attach(CLI::App *app) {
        qsync_sweep_config d;
        qsync_sweep_config_default(&d);
        budget = d.budget;
        branch_bits = d.max_branch_bits;
        branch_samples = d.sampled_branches;
        app->add_option("--min-bit-weight", min_bit, "Smallest bit-flip weight enumerated");
        app->add_option("--bit-weight", max_bit, "Largest bit-flip weight enumerated");
        app->add_option("--min-phase-weight", min_phase, "Smallest phase-flip weight enumerated");
        app->add_option("--phase-weight", max_phase, "Largest phase-flip weight enumerated");
        app->add_option("--slip-range", slip_range, "Slip interval LO HI (default -a_l..a_r)")->expected(2);
        app->add_option("--seed", seed, "Seed for sampled branches and neighbour blocks");
        app->add_option("--budget", budget, "Maximum number of pipeline runs");
        app->add_option("--branch-bits", branch_bits, "Enumerate every C-perp branch up to this dimension");
        app->add_option("--branch-samples", branch_samples, "Branches sampled above that dimension");
        app->add_option("--threads", threads, "Worker threads (0 = all cores; capped by QSYNC_THREADS)");
        app->add_option("--report", report, "Report JSON path, '-' for stdout");
    }

    qsync_sweep_config config() const {
        qsync_sweep_config c;
        qsync_sweep_config_default(&c);
        c.min_bit_weight = min_bit;
        c.max_bit_weight = max_bit;
        c.min_phase_weight = min_phase;
        c.max_phase_weight = max_phase;
        if (!slip_range.empty()) {
            c.has_slip_range = 1;
            c.slip_lo = slip_range[0];
            c.slip_hi = slip_range[1];
        }
        c.max_branch_bits = branch_bits;
        c.sampled_branches = branch_samples;
        c.seed = seed;
        c.budget = budget;
        c.threads = threads;
        return c;
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Construct and simulate quantum synchronizable codes built from cyclic code pairs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qsync_version()));

    CodeSource construct_src;
    std::string construct_out;
    bool construct_json = false;
    CLI::App *construct = app.add_subcommand("construct", "Build a code and write its descriptor");
    construct_src.attach(construct, false);
    construct->add_option("--out,-o", construct_out, "Descriptor output path");
    construct->add_flag("--json", construct_json, "Print the descriptor to stdout instead of the summary");

    CodeSource table_src;
    CLI::App *table = app.add_subcommand("table", "Print the slip to sync-remainder table");
    table_src.attach(table, true);

    CodeSource sim_src;
    qsync_sim_config sim;
    qsync_sim_config_default(&sim);
    std::optional<size_t> sim_bit_weight;
    std::optional<size_t> sim_phase_weight;
    std::optional<int64_t> sim_slip;
    std::vector<int64_t> sim_slip_range;
    bool sim_clamp = false;
    std::string sim_csv;
    std::string sim_summary = "-";
    CLI::App *simulate = app.add_subcommand("simulate", "Seeded Monte Carlo run of the decode pipeline");
    sim_src.attach(simulate, true);
    simulate->add_option("--trials", sim.trials, "Number of trials")->required();
    simulate->add_option("--seed", sim.seed, "Master seed")->required();
    simulate->add_option("--p-bit", sim.p_bit, "Independent bit-flip probability per qubit")->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--p-phase", sim.p_phase, "Independent phase-flip probability per qubit")->check(CLI::Range(0.0, 1.0));
    auto *bw = simulate->add_option("--bit-weight", sim_bit_weight, "Exact bit-flip weight per block");
    auto *pw = simulate->add_option("--phase-weight", sim_phase_weight, "Exact phase-flip weight per block");
    auto *fixed_slip = simulate->add_option("--slip", sim_slip, "Fixed slip for every trial");
    simulate->add_option("--slip-range", sim_slip_range, "Uniform slip over LO HI")->expected(2)->excludes(fixed_slip);
    simulate->add_flag("--clamp", sim_clamp, "Trim sampled errors to the guaranteed radii");
    simulate->add_option("--csv", sim_csv, "Per-trial CSV path, '-' for stdout");
    simulate->add_option("--summary", sim_summary, "Summary JSON path, '-' for stdout");
    simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores; capped by QSYNC_THREADS)");
    bw->excludes("--p-bit");
    pw->excludes("--p-phase");

    CodeSource ex_src;
    SweepFlags ex_flags;
    CLI::App *exhaustive = app.add_subcommand("exhaustive", "Enumerate bounded-weight errors, slips and branches");
    ex_src.attach(exhaustive, true);
    ex_flags.attach(exhaustive);

    CodeSource or_src;
    SweepFlags or_flags;
    bool or_no_controls = false;
    CLI::App *oracle = app.add_subcommand("oracle", "Cross-check the simulator against the state-vector oracle");
    or_src.attach(oracle, true);
    or_flags.attach(oracle);
    oracle->add_flag("--no-controls", or_no_controls, "Skip the corrupted-correction negative controls");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (*construct) {
            CodeHandle code = construct_src.open();
            OwnedString json;
            check(qsync_code_descriptor(code.get(), &json.ptr));
            if (!construct_out.empty()) {
                write_text(construct_out, json.str());
            }
            if (construct_json) {
                std::cout << json.str();
            } else {
                print_code_summary(code.get());
            }
        } else if (*table) {
            CodeHandle code = table_src.open();
            qsync_code_info info = info_of(code.get());
            std::printf("slip\tremainder\n");
            for (size_t i = 0; i < info.sync_table_size; i++) {
                int64_t slip;
                OwnedString rem;
                check(qsync_code_sync_entry(code.get(), i, &slip, &rem.ptr));
                std::printf("%+lld\t%s\n", static_cast<long long>(slip), rem.ptr);
            }
        } else if (*simulate) {
            CodeHandle code = sim_src.open();
            if (sim_bit_weight || sim_phase_weight) {
                if (sim.p_bit > 0 || sim.p_phase > 0) {
                    throw CliError{EXIT_USAGE, "fixed weights and flip probabilities are exclusive"};
                }
                sim.noise = QSYNC_NOISE_FIXED_WEIGHT;
                sim.bit_weight = sim_bit_weight.value_or(0);
                sim.phase_weight = sim_phase_weight.value_or(0);
            }
            if (sim_slip) {
                sim.slip_policy = QSYNC_SLIP_FIXED;
                sim.slip_lo = sim.slip_hi = *sim_slip;
            } else if (!sim_slip_range.empty()) {
                sim.slip_policy = QSYNC_SLIP_RANGE;
                sim.slip_lo = sim_slip_range[0];
                sim.slip_hi = sim_slip_range[1];
            }
            sim.clamped = sim_clamp;
            OwnedString csv, summary;
            double rate = 0;
            check(qsync_simulate(code.get(), &sim, sim_csv.empty() ? nullptr : &csv.ptr, &summary.ptr, &rate));
            if (!sim_csv.empty()) {
                write_text(sim_csv, csv.str());
            }
            write_text(sim_summary, summary.str());
            std::fprintf(stderr, "success rate %.6f over %llu trials\n", rate, static_cast<unsigned long long>(sim.trials));
        } else if (*exhaustive) {
            CodeHandle code = ex_src.open();
            qsync_sweep_config cfg = ex_flags.config();
            OwnedString report;
            uint64_t violations = 0;
            double non_success = 0;
            check(qsync_exhaustive(code.get(), &cfg, &report.ptr, &violations, &non_success));
            write_text(ex_flags.report, report.str());
            std::fprintf(stderr, "%llu contract violations; non-success fraction %.6f\n", static_cast<unsigned long long>(violations),
                         non_success);
            return violations == 0 ? 0 : EXIT_CONTRACT;
        } else if (*oracle) {
            CodeHandle code = or_src.open();
            qsync_sweep_config cfg = or_flags.config();
            OwnedString report;
            int agrees = 0;
            double deviation = 0;
            check(qsync_oracle(code.get(), &cfg, or_no_controls ? 0 : 1, &report.ptr, &agrees, &deviation));
            write_text(or_flags.report, report.str());
            std::fprintf(stderr, "oracle %s; max |1 - fidelity| on successes %.3e\n", agrees ? "agrees" : "DISAGREES", deviation);
            return agrees ? 0 : EXIT_CONTRACT;
        }
    } catch (const CliError &e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    }
    return 0;
}
