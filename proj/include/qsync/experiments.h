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

#ifndef QSYNC_EXPERIMENTS_H
#define QSYNC_EXPERIMENTS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsync/frame_sim.h"

namespace qsync {

/// Worker count: the request (0 means hardware concurrency), capped by QSYNC_THREADS when set.
size_t resolve_thread_count(size_t requested);

enum class SlipPolicyKind { fixed, uniform, range };

struct SlipPolicy {
    SlipPolicyKind kind = SlipPolicyKind::uniform;
    /// Fixed slip uses lo; range draws uniformly from [lo, hi]. Uniform ignores both and uses
    /// [-a_l, a_r].
    int64_t lo = 0;
    int64_t hi = 0;

    static SlipPolicy fixed(int64_t slip) {
        return {SlipPolicyKind::fixed, slip, slip};
    }
    static SlipPolicy uniform() {
        return {};
    }
    static SlipPolicy range(int64_t lo, int64_t hi) {
        return {SlipPolicyKind::range, lo, hi};
    }
    /// Throws InvalidInput when the policy leaves the simulable slip range.
    void validate(const QsyncCode &code) const;
    int64_t sample(const QsyncCode &code, Rng &rng) const;
};

enum class NoiseKind { iid, fixed_weight };

struct ChannelModel {
    NoiseKind kind = NoiseKind::iid;
    double p_bit = 0;
    double p_phase = 0;
    size_t bit_weight = 0;
    size_t phase_weight = 0;
    /// Trims randomly chosen flips until every length-n window holds at most bit_radius bit flips
    /// and the block holds at most phase_radius phase flips.
    bool clamped = false;

    void validate(const QsyncCode &code) const;
};

ChannelEffect sample_effect(const QsyncCode &code, const ChannelModel &channel, const SlipPolicy &slip, Rng &rng);

struct SimulationConfig {
    uint64_t trials = 0;
    uint64_t seed = 0;
    ChannelModel channel;
    SlipPolicy slip;
    size_t threads = 0;
};

struct TrialRecord {
    uint64_t trial_id;
    int64_t slip_true;
    std::optional<int64_t> slip_est;
    std::vector<size_t> window_bit_weights;
    size_t phase_weight;
    bool within_guarantee;
    DecodeStatus status;
};

/// One trial of a seeded run; depends only on (code, config minus threads, trial_id).
TrialRecord run_trial(const QsyncCode &code, const SimulationConfig &config, uint64_t trial_id);

using StatusCounts = std::array<uint64_t, NUM_DECODE_STATUSES>;

struct SimulationResult {
    std::vector<TrialRecord> records;
    StatusCounts counts{};
    StatusCounts in_range_counts{};
    StatusCounts out_of_range_counts{};
    StatusCounts guaranteed_counts{};
};

SimulationResult simulate(const QsyncCode &code, const SimulationConfig &config);

std::string trials_csv(const SimulationResult &result);
std::string simulation_summary_json(const QsyncCode &code, const SimulationConfig &config, const SimulationResult &result);

/// Exhaustive sweep over logical index x slip x bit pattern x phase pattern x C^perp branch.
struct ExhaustiveConfig {
    size_t min_bit_weight = 0;
    size_t max_bit_weight = 0;
    size_t min_phase_weight = 0;
    size_t max_phase_weight = 0;
    /// Defaults to [-a_l, a_r].
    std::optional<int64_t> slip_lo;
    std::optional<int64_t> slip_hi;
    /// Every branch when C^perp has at most 2^max_branch_bits elements, otherwise this many
    /// seeded samples.
    size_t max_branch_bits = 10;
    size_t sampled_branches = 4;
    uint64_t seed = 0;
    /// Pipeline runs allowed before BudgetExceeded.
    double budget = 5e7;
    size_t threads = 0;
    size_t max_reported_violations = 20;
};

struct CaseTuple {
    uint64_t logical_index;
    int64_t slip;
    BitVec bit_flips;
    BitVec phase_flips;
    BitVec branch;
};

struct Violation {
    CaseTuple tuple;
    DecodeStatus status;
};

struct ExhaustiveReport {
    uint64_t cases = 0;
    uint64_t guaranteed_cases = 0;
    uint64_t violation_count = 0;
    StatusCounts counts{};
    StatusCounts guaranteed_counts{};
    std::vector<Violation> violations;
    double non_success_fraction() const;
};

/// Number of pipeline runs the sweep would take.
double exhaustive_cost(const QsyncCode &code, const ExhaustiveConfig &config);
ExhaustiveReport run_exhaustive(const QsyncCode &code, const ExhaustiveConfig &config);
std::string exhaustive_report_json(const QsyncCode &code, const ExhaustiveConfig &config, const ExhaustiveReport &report);

struct OracleConfig {
    ExhaustiveConfig sweep;
    bool negative_controls = true;
    /// Cases whose oracle/simulator mismatches are listed in the report.
    size_t max_reported_disagreements = 20;
};

struct Disagreement {
    CaseTuple tuple;
    DecodeStatus status;
    double fidelity;
};

struct OracleReport {
    uint64_t cases = 0;
    uint64_t success_cases = 0;
    uint64_t failure_cases = 0;
    uint64_t degenerate_cases = 0;
    /// Max |1 - F| over cases the simulator marks success.
    double max_success_deviation = 0;
    /// Max F over non-degenerate failures.
    double max_failure_fidelity = 0;
    uint64_t disagreement_count = 0;
    std::vector<Disagreement> disagreements;
    uint64_t negative_controls = 0;
    uint64_t negative_controls_detected = 0;
    /// Min over controls of 1 - F.
    double min_control_deficit = 1;
    bool agrees() const {
        return disagreement_count == 0 && negative_controls_detected == negative_controls;
    }
};

constexpr double ORACLE_SUCCESS_TOLERANCE = 1e-9;
constexpr double ORACLE_FAILURE_MARGIN = 1e-6;

/// Corrupts a successful report by one qubit: moves (or adds) one bit correction on odd
/// variants, one phase correction on even variants.
DecodeReport corrupt_report(const QsyncCode &code, const DecodeReport &report, uint64_t variant);

OracleReport run_oracle(const QsyncCode &code, const OracleConfig &config);
std::string oracle_report_json(const QsyncCode &code, const OracleConfig &config, const OracleReport &report);

}  // namespace qsync

#endif
