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

#include "qsync/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qsync/descriptor.h"
#include "qsync/errors.h"
#include "qsync/statevector.h"

using namespace qsync;
using nlohmann::json;

size_t qsync::resolve_thread_count(size_t requested) {
    size_t count = requested ? requested : std::max<size_t>(1, std::thread::hardware_concurrency());
    if (const char *cap = std::getenv("QSYNC_THREADS")) {
        char *end = nullptr;
        unsigned long long value = std::strtoull(cap, &end, 10);
        if (end != cap && *end == '\0' && value > 0) {
            count = std::min<size_t>(count, static_cast<size_t>(value));
        }
    }
    return std::max<size_t>(count, 1);
}

namespace {

/// Calls body(begin, end) over chunks of [0, count) from `threads` workers.
void parallel_chunks(uint64_t count, size_t threads, const std::function<void(uint64_t, uint64_t)> &body) {
    threads = std::max<size_t>(1, std::min<uint64_t>(threads, count));
    constexpr uint64_t CHUNK = 64;
    if (threads == 1) {
        body(0, count);
        return;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (size_t t = 0; t < threads; t++) {
        workers.emplace_back([&] {
            try {
                while (true) {
                    uint64_t begin = next.fetch_add(CHUNK);
                    if (begin >= count) {
                        return;
                    }
                    body(begin, std::min(count, begin + CHUNK));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
            }
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

uint64_t logical_mask(const QsyncCode &code) {
    return code.k_logical() >= 64 ? ~uint64_t{0} : (uint64_t{1} << code.k_logical()) - 1;
}

void clear_random_bit_in(BitVec &v, size_t start, size_t len, Rng &rng) {
    std::vector<size_t> hits;
    for (size_t i = start; i < start + len; i++) {
        if (v.get(i)) {
            hits.push_back(i);
        }
    }
    v.set(hits[rng.below(hits.size())], false);
}

BitVec random_fixed_weight(size_t len, size_t weight, Rng &rng) {
    std::vector<size_t> order(len);
    for (size_t i = 0; i < len; i++) {
        order[i] = i;
    }
    BitVec out(len);
    for (size_t i = 0; i < weight; i++) {
        size_t j = i + rng.below(len - i);
        std::swap(order[i], order[j]);
        out.set(order[i], true);
    }
    return out;
}

json counts_json(const StatusCounts &counts) {
    json out = json::object();
    for (size_t s = 0; s < NUM_DECODE_STATUSES; s++) {
        out[status_name(static_cast<DecodeStatus>(s))] = counts[s];
    }
    return out;
}

uint64_t total(const StatusCounts &counts) {
    uint64_t t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

double success_rate(const StatusCounts &counts) {
    uint64_t t = total(counts);
    if (t == 0) {
        return 0;
    }
    return static_cast<double>(counts[static_cast<size_t>(DecodeStatus::success)] +
                               counts[static_cast<size_t>(DecodeStatus::degenerate_success)]) /
           static_cast<double>(t);
}

json class_json(const StatusCounts &counts) {
    return {{"trials", total(counts)}, {"success_rate", success_rate(counts)}, {"counts", counts_json(counts)}};
}

void add_counts(StatusCounts &into, const StatusCounts &from) {
    for (size_t s = 0; s < NUM_DECODE_STATUSES; s++) {
        into[s] += from[s];
    }
}

const char *slip_kind_name(SlipPolicyKind kind) {
    switch (kind) {
        case SlipPolicyKind::fixed:
            return "fixed";
        case SlipPolicyKind::uniform:
            return "uniform";
        case SlipPolicyKind::range:
            return "range";
    }
    return "?";
}

json slip_json(const QsyncCode &code, const SlipPolicy &slip) {
    if (slip.kind == SlipPolicyKind::uniform) {
        return {{"kind", "uniform"}, {"lo", code.min_slip()}, {"hi", code.max_slip()}};
    }
    return {{"kind", slip_kind_name(slip.kind)}, {"lo", slip.lo}, {"hi", slip.hi}};
}

json channel_json(const ChannelModel &channel) {
    json out;
    if (channel.kind == NoiseKind::iid) {
        out = {{"model", "iid"}, {"p_bit", channel.p_bit}, {"p_phase", channel.p_phase}};
    } else {
        out = {{"model", "fixed_weight"}, {"bit_weight", channel.bit_weight}, {"phase_weight", channel.phase_weight}};
    }
    out["clamped"] = channel.clamped;
    return out;
}

json tuple_json(const CaseTuple &t) {
    return {
        {"logical_index", t.logical_index},
        {"slip", t.slip},
        {"bit_flips", t.bit_flips.support()},
        {"phase_flips", t.phase_flips.support()},
        {"branch", t.branch.str()},
    };
}

/// Every vector of length `len` with weight in [lo, hi], by weight then lexicographic support.
std::vector<BitVec> patterns(size_t len, size_t lo, size_t hi) {
    std::vector<BitVec> out;
    for (size_t w = lo; w <= std::min(hi, len); w++) {
        std::vector<size_t> idx(w);
        for (size_t i = 0; i < w; i++) {
            idx[i] = i;
        }
        while (true) {
            out.push_back(BitVec::from_indices(len, idx));
            size_t i = w;
            while (i > 0 && idx[i - 1] == len - w + (i - 1)) {
                i--;
            }
            if (i == 0) {
                break;
            }
            idx[i - 1]++;
            for (size_t j = i; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return out;
}

double pattern_count(size_t len, size_t lo, size_t hi) {
    double count = 0;
    for (size_t w = lo; w <= std::min(hi, len); w++) {
        double c = 1;
        for (size_t i = 0; i < w; i++) {
            c = c * static_cast<double>(len - i) / static_cast<double>(i + 1);
        }
        count += c;
    }
    return count;
}

/// The enumerated axes of an exhaustive sweep, case index decoded with the branch fastest.
struct Sweep {
    uint64_t num_logical;
    int64_t slip_lo;
    int64_t slip_hi;
    std::vector<BitVec> bit_patterns;
    std::vector<BitVec> phase_patterns;
    std::vector<BitVec> branches;
    BitVec prev_block;
    BitVec next_block;

    uint64_t size() const {
        return num_logical * static_cast<uint64_t>(slip_hi - slip_lo + 1) * bit_patterns.size() * phase_patterns.size() *
               branches.size();
    }

    CaseTuple at(uint64_t index) const {
        CaseTuple t;
        size_t branch = index % branches.size();
        index /= branches.size();
        size_t phase = index % phase_patterns.size();
        index /= phase_patterns.size();
        size_t bit = index % bit_patterns.size();
        index /= bit_patterns.size();
        uint64_t num_slips = static_cast<uint64_t>(slip_hi - slip_lo + 1);
        t.slip = slip_lo + static_cast<int64_t>(index % num_slips);
        t.logical_index = index / num_slips;
        t.bit_flips = bit_patterns[bit];
        t.phase_flips = phase_patterns[phase];
        t.branch = branches[branch];
        return t;
    }
};

size_t branch_count(const QsyncCode &code, const ExhaustiveConfig &config) {
    size_t dim = code.c_dual_rows().size();
    return dim <= config.max_branch_bits ? size_t{1} << dim : config.sampled_branches;
}

std::pair<int64_t, int64_t> sweep_slips(const QsyncCode &code, const ExhaustiveConfig &config) {
    int64_t lo = config.slip_lo.value_or(code.min_slip());
    int64_t hi = config.slip_hi.value_or(code.max_slip());
    if (lo > hi || lo < min_simulable_slip(code) || hi > max_simulable_slip(code)) {
        throw InvalidInput("sweep slip range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] must lie within [" +
                           std::to_string(min_simulable_slip(code)) + ", " + std::to_string(max_simulable_slip(code)) + "]");
    }
    return {lo, hi};
}

Sweep build_sweep(const QsyncCode &code, const ExhaustiveConfig &config) {
    double cost = exhaustive_cost(code, config);
    if (cost > config.budget) {
        std::ostringstream msg;
        msg << "exhaustive sweep needs " << cost << " pipeline runs, over the budget of " << config.budget;
        throw BudgetExceeded(msg.str(), cost);
    }
    Sweep s;
    s.num_logical = uint64_t{1} << code.k_logical();
    std::tie(s.slip_lo, s.slip_hi) = sweep_slips(code, config);
    s.bit_patterns = patterns(code.n_ext(), config.min_bit_weight, config.max_bit_weight);
    s.phase_patterns = patterns(code.n_ext(), config.min_phase_weight, config.max_phase_weight);
    Rng rng(splitmix64(config.seed ^ 0x5eedb10c5ULL));
    size_t dim = code.c_dual_rows().size();
    if (dim <= config.max_branch_bits) {
        for (uint64_t i = 0; i < (uint64_t{1} << dim); i++) {
            s.branches.push_back(code.c_dual_element(i));
        }
    } else {
        for (size_t i = 0; i < config.sampled_branches; i++) {
            s.branches.push_back(random_c_dual_element(code, rng));
        }
    }
    s.prev_block = encode(code, rng.next() & logical_mask(code), random_c_dual_element(code, rng)).extended;
    s.next_block = encode(code, rng.next() & logical_mask(code), random_c_dual_element(code, rng)).extended;
    return s;
}

DecodeReport run_case(const QsyncCode &code, const Sweep &sweep, const CaseTuple &t) {
    ChannelEffect effect{t.bit_flips, t.phase_flips, t.slip};
    return run_pipeline_on_branch(code, t.logical_index, effect, t.branch, sweep.prev_block, sweep.next_block);
}

template <typename Item>
void keep_first(std::vector<std::pair<uint64_t, Item>> &items, size_t limit) {
    std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    if (items.size() > limit) {
        items.resize(limit);
    }
}

json sweep_json(const QsyncCode &code, const ExhaustiveConfig &config) {
    auto [lo, hi] = sweep_slips(code, config);
    return {
        {"bit_weight", {config.min_bit_weight, config.max_bit_weight}},
        {"phase_weight", {config.min_phase_weight, config.max_phase_weight}},
        {"slips", {lo, hi}},
        {"branches", branch_count(code, config)},
        {"branches_exhaustive", code.c_dual_rows().size() <= config.max_branch_bits},
        {"seed", config.seed},
    };
}

}  // namespace

void SlipPolicy::validate(const QsyncCode &code) const {
    if (kind == SlipPolicyKind::uniform) {
        return;
    }
    if (lo > hi || lo < min_simulable_slip(code) || hi > max_simulable_slip(code)) {
        throw InvalidInput("slip policy [" + std::to_string(lo) + ", " + std::to_string(hi) + "] must lie within [" +
                           std::to_string(min_simulable_slip(code)) + ", " + std::to_string(max_simulable_slip(code)) + "]");
    }
}

int64_t SlipPolicy::sample(const QsyncCode &code, Rng &rng) const {
    switch (kind) {
        case SlipPolicyKind::fixed:
            return lo;
        case SlipPolicyKind::uniform:
            return rng.between(code.min_slip(), code.max_slip());
        case SlipPolicyKind::range:
            return rng.between(lo, hi);
    }
    return 0;
}

void ChannelModel::validate(const QsyncCode &code) const {
    if (kind == NoiseKind::iid) {
        if (!(p_bit >= 0 && p_bit <= 1) || !(p_phase >= 0 && p_phase <= 1)) {
            throw InvalidInput("flip probabilities must lie in [0, 1]");
        }
    } else if (bit_weight > code.n_ext() || phase_weight > code.n_ext()) {
        throw InvalidInput("fixed error weights must not exceed n_ext = " + std::to_string(code.n_ext()));
    }
}

ChannelEffect qsync::sample_effect(const QsyncCode &code, const ChannelModel &channel, const SlipPolicy &slip, Rng &rng) {
    ChannelEffect effect = no_errors(code, slip.sample(code, rng));
    size_t n_ext = code.n_ext();
    if (channel.kind == NoiseKind::iid) {
        for (size_t i = 0; i < n_ext; i++) {
            if (rng.bernoulli(channel.p_bit)) {
                effect.bit_flips.flip(i);
            }
        }
        for (size_t i = 0; i < n_ext; i++) {
            if (rng.bernoulli(channel.p_phase)) {
                effect.phase_flips.flip(i);
            }
        }
    } else {
        effect.bit_flips = random_fixed_weight(n_ext, channel.bit_weight, rng);
        effect.phase_flips = random_fixed_weight(n_ext, channel.phase_weight, rng);
    }
    if (channel.clamped) {
        size_t n = code.n();
        for (size_t offset = 0; offset <= code.a_l() + code.a_r(); offset++) {
            while (effect.bit_flips.slice(offset, n).popcount() > code.bit_radius()) {
                clear_random_bit_in(effect.bit_flips, offset, n, rng);
            }
        }
        while (effect.phase_flips.popcount() > code.phase_radius()) {
            clear_random_bit_in(effect.phase_flips, 0, n_ext, rng);
        }
    }
    return effect;
}

TrialRecord qsync::run_trial(const QsyncCode &code, const SimulationConfig &config, uint64_t trial_id) {
    Rng rng = Rng::for_trial(config.seed, trial_id);
    ChannelEffect effect = sample_effect(code, config.channel, config.slip, rng);
    uint64_t logical = rng.next() & logical_mask(code);
    DecodeReport report = run_pipeline(code, logical, effect, rng.next());
    return TrialRecord{
        trial_id,
        effect.slip,
        report.slip_estimate,
        window_bit_weights(code, effect.bit_flips),
        effect.phase_flips.popcount(),
        within_guarantee(code, effect),
        report.status,
    };
}

SimulationResult qsync::simulate(const QsyncCode &code, const SimulationConfig &config) {
    config.channel.validate(code);
    config.slip.validate(code);
    SimulationResult result;
    result.records.resize(config.trials);
    parallel_chunks(config.trials, resolve_thread_count(config.threads), [&](uint64_t begin, uint64_t end) {
        for (uint64_t t = begin; t < end; t++) {
            result.records[t] = run_trial(code, config, t);
        }
    });
    for (const auto &r : result.records) {
        size_t s = static_cast<size_t>(r.status);
        result.counts[s]++;
        (code.slip_in_range(r.slip_true) ? result.in_range_counts : result.out_of_range_counts)[s]++;
        if (r.within_guarantee) {
            result.guaranteed_counts[s]++;
        }
    }
    return result;
}

std::string qsync::trials_csv(const SimulationResult &result) {
    std::ostringstream out;
    out << "trial_id,slip_true,slip_est,bit_weight_in_each_window,phase_weight,status\n";
    for (const auto &r : result.records) {
        out << r.trial_id << ',' << r.slip_true << ',';
        if (r.slip_est) {
            out << *r.slip_est;
        }
        out << ',';
        for (size_t i = 0; i < r.window_bit_weights.size(); i++) {
            out << (i ? ";" : "") << r.window_bit_weights[i];
        }
        out << ',' << r.phase_weight << ',' << status_name(r.status) << '\n';
    }
    return out.str();
}

std::string qsync::simulation_summary_json(const QsyncCode &code, const SimulationConfig &config, const SimulationResult &result) {
    json rates = json::object();
    for (size_t s = 0; s < NUM_DECODE_STATUSES; s++) {
        rates[status_name(static_cast<DecodeStatus>(s))] =
            config.trials ? static_cast<double>(result.counts[s]) / static_cast<double>(config.trials) : 0.0;
    }
    json out = {
        {"code_descriptor_hash", hex64(descriptor_hash(code))},
        {"rng", RNG_ALGORITHM},
        {"seed", config.seed},
        {"trials", config.trials},
        {"channel", channel_json(config.channel)},
        {"slip_policy", slip_json(code, config.slip)},
        {"counts", counts_json(result.counts)},
        {"rates", rates},
        {"success_rate", success_rate(result.counts)},
        {"conditional",
         {
             {"slip_in_range", class_json(result.in_range_counts)},
             {"slip_out_of_range", class_json(result.out_of_range_counts)},
             {"within_guarantee", class_json(result.guaranteed_counts)},
         }},
    };
    return out.dump(2) + "\n";
}

double ExhaustiveReport::non_success_fraction() const {
    return cases ? 1.0 - success_rate(counts) : 0.0;
}

double qsync::exhaustive_cost(const QsyncCode &code, const ExhaustiveConfig &config) {
    auto [lo, hi] = sweep_slips(code, config);
    if (config.min_bit_weight > config.max_bit_weight || config.min_phase_weight > config.max_phase_weight) {
        throw InvalidInput("weight ranges must satisfy min <= max");
    }
    return std::ldexp(1.0, static_cast<int>(std::min<size_t>(code.k_logical(), 1000))) * static_cast<double>(hi - lo + 1) *
           pattern_count(code.n_ext(), config.min_bit_weight, config.max_bit_weight) *
           pattern_count(code.n_ext(), config.min_phase_weight, config.max_phase_weight) *
           static_cast<double>(branch_count(code, config));
}

ExhaustiveReport qsync::run_exhaustive(const QsyncCode &code, const ExhaustiveConfig &config) {
    Sweep sweep = build_sweep(code, config);
    ExhaustiveReport report;
    report.cases = sweep.size();
    std::mutex merge_mutex;
    std::vector<std::pair<uint64_t, Violation>> violations;
    parallel_chunks(report.cases, resolve_thread_count(config.threads), [&](uint64_t begin, uint64_t end) {
        StatusCounts counts{};
        StatusCounts guaranteed{};
        uint64_t guaranteed_cases = 0;
        uint64_t violation_count = 0;
        std::vector<std::pair<uint64_t, Violation>> local;
        for (uint64_t i = begin; i < end; i++) {
            CaseTuple t = sweep.at(i);
            DecodeReport r = run_case(code, sweep, t);
            counts[static_cast<size_t>(r.status)]++;
            if (within_guarantee(code, ChannelEffect{t.bit_flips, t.phase_flips, t.slip})) {
                guaranteed_cases++;
                guaranteed[static_cast<size_t>(r.status)]++;
                if (!is_success(r.status)) {
                    violation_count++;
                    if (local.size() < config.max_reported_violations) {
                        local.push_back({i, Violation{t, r.status}});
                    }
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        add_counts(report.counts, counts);
        add_counts(report.guaranteed_counts, guaranteed);
        report.guaranteed_cases += guaranteed_cases;
        report.violation_count += violation_count;
        violations.insert(violations.end(), local.begin(), local.end());
        keep_first(violations, config.max_reported_violations);
    });
    for (auto &v : violations) {
        report.violations.push_back(std::move(v.second));
    }
    return report;
}

std::string qsync::exhaustive_report_json(const QsyncCode &code, const ExhaustiveConfig &config, const ExhaustiveReport &report) {
    json violations = json::array();
    for (const auto &v : report.violations) {
        json item = tuple_json(v.tuple);
        item["status"] = status_name(v.status);
        violations.push_back(item);
    }
    json out = {
        {"code_descriptor_hash", hex64(descriptor_hash(code))},
        {"sweep", sweep_json(code, config)},
        {"cases", report.cases},
        {"counts", counts_json(report.counts)},
        {"non_success_fraction", report.non_success_fraction()},
        {"guaranteed_cases", report.guaranteed_cases},
        {"guaranteed_counts", counts_json(report.guaranteed_counts)},
        {"violation_count", report.violation_count},
        {"contract_holds", report.violation_count == 0},
        {"violations", violations},
    };
    return out.dump(2) + "\n";
}

DecodeReport qsync::corrupt_report(const QsyncCode &code, const DecodeReport &report, uint64_t variant) {
    DecodeReport bad = report;
    bool bit = variant % 2 == 1;
    BitVec &target = bit ? bad.total_bit_correction : bad.phase_correction;
    size_t len = target.size();
    auto support = target.support();
    if (!support.empty()) {
        target.flip(support.front());
        target.flip((support.front() + 1) % len);
    } else {
        size_t pos = static_cast<size_t>((variant / 2) % code.n());
        target.flip(bit ? code.a_l() + pos : pos);
    }
    return bad;
}

OracleReport qsync::run_oracle(const QsyncCode &code, const OracleConfig &config) {
    if (code.n_ext() > MAX_ORACLE_QUBITS) {
        throw BudgetExceeded("oracle needs n_ext <= " + std::to_string(MAX_ORACLE_QUBITS) + ", got " + std::to_string(code.n_ext()),
                             std::ldexp(1.0, static_cast<int>(code.n_ext())));
    }
    Sweep sweep = build_sweep(code, config.sweep);
    OracleReport report;
    report.cases = sweep.size();
    std::mutex merge_mutex;
    std::vector<std::pair<uint64_t, Disagreement>> disagreements;
    parallel_chunks(report.cases, resolve_thread_count(config.sweep.threads), [&](uint64_t begin, uint64_t end) {
        OracleReport part;
        std::vector<std::pair<uint64_t, Disagreement>> local;
        for (uint64_t i = begin; i < end; i++) {
            CaseTuple t = sweep.at(i);
            ChannelEffect effect{t.bit_flips, t.phase_flips, t.slip};
            DecodeReport r = run_case(code, sweep, t);
            double fidelity = oracle_fidelity(code, t.logical_index, effect, r);
            bool agree;
            if (is_success(r.status)) {
                part.success_cases++;
                if (r.status == DecodeStatus::degenerate_success) {
                    part.degenerate_cases++;
                }
                double deviation = std::abs(1.0 - fidelity);
                part.max_success_deviation = std::max(part.max_success_deviation, deviation);
                agree = deviation <= ORACLE_SUCCESS_TOLERANCE;
                if (config.negative_controls) {
                    double control = oracle_fidelity(code, t.logical_index, effect, corrupt_report(code, r, i));
                    part.negative_controls++;
                    part.min_control_deficit = std::min(part.min_control_deficit, 1.0 - control);
                    if (control < 1.0 - ORACLE_FAILURE_MARGIN) {
                        part.negative_controls_detected++;
                    }
                }
            } else {
                part.failure_cases++;
                part.max_failure_fidelity = std::max(part.max_failure_fidelity, fidelity);
                agree = fidelity < 1.0 - ORACLE_FAILURE_MARGIN;
            }
            if (!agree) {
                part.disagreement_count++;
                if (local.size() < config.max_reported_disagreements) {
                    local.push_back({i, Disagreement{t, r.status, fidelity}});
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.success_cases += part.success_cases;
        report.failure_cases += part.failure_cases;
        report.degenerate_cases += part.degenerate_cases;
        report.max_success_deviation = std::max(report.max_success_deviation, part.max_success_deviation);
        report.max_failure_fidelity = std::max(report.max_failure_fidelity, part.max_failure_fidelity);
        report.disagreement_count += part.disagreement_count;
        report.negative_controls += part.negative_controls;
        report.negative_controls_detected += part.negative_controls_detected;
        report.min_control_deficit = std::min(report.min_control_deficit, part.min_control_deficit);
        disagreements.insert(disagreements.end(), local.begin(), local.end());
        keep_first(disagreements, config.max_reported_disagreements);
    });
    for (auto &d : disagreements) {
        report.disagreements.push_back(std::move(d.second));
    }
    return report;
}

std::string qsync::oracle_report_json(const QsyncCode &code, const OracleConfig &config, const OracleReport &report) {
    json disagreements = json::array();
    for (const auto &d : report.disagreements) {
        json item = tuple_json(d.tuple);
        item["status"] = status_name(d.status);
        item["fidelity"] = d.fidelity;
        disagreements.push_back(item);
    }
    json out = {
        {"code_descriptor_hash", hex64(descriptor_hash(code))},
        {"sweep", sweep_json(code, config.sweep)},
        {"cases", report.cases},
        {"success_cases", report.success_cases},
        {"degenerate_cases", report.degenerate_cases},
        {"failure_cases", report.failure_cases},
        {"max_success_deviation", report.max_success_deviation},
        {"max_failure_fidelity", report.max_failure_fidelity},
        {"disagreement_count", report.disagreement_count},
        {"disagreements", disagreements},
        {"negative_controls", report.negative_controls},
        {"negative_controls_detected", report.negative_controls_detected},
        {"min_control_deficit", report.min_control_deficit},
        {"agrees", report.agrees()},
    };
    return out.dump(2) + "\n";
}
