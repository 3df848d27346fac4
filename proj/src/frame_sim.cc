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

#include "qsync/frame_sim.h"

#include <array>

#include "qsync/errors.h"

using namespace qsync;

namespace {

constexpr std::array<const char *, NUM_DECODE_STATUSES> STATUS_NAMES = {
    "success", "degenerate_success", "bit_failure", "sync_failure", "phase_failure"};

void require_length(const BitVec &v, size_t expected, const char *what) {
    if (v.size() != expected) {
        throw InvalidInput(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(expected));
    }
}

}  // namespace

const char *qsync::status_name(DecodeStatus status) {
    return STATUS_NAMES[static_cast<size_t>(status)];
}

std::optional<DecodeStatus> qsync::parse_status(std::string_view name) {
    for (size_t k = 0; k < STATUS_NAMES.size(); k++) {
        if (name == STATUS_NAMES[k]) {
            return static_cast<DecodeStatus>(k);
        }
    }
    return std::nullopt;
}

BitVec qsync::extend_core(const BitVec &core, size_t a_l, size_t a_r) {
    size_t n = core.size();
    if (a_l > n || a_r > n) {
        throw InvalidInput("extension longer than the core");
    }
    BitVec out(n + a_l + a_r);
    out.assign_range(0, core.slice(n - a_l, a_l));
    out.assign_range(a_l, core);
    out.assign_range(a_l + n, core.slice(0, a_r));
    return out;
}

EncodedFrame qsync::encode(const QsyncCode &code, uint64_t logical_index, const BitVec &c_dual_sample) {
    require_length(c_dual_sample, code.n(), "C^perp sample");
    if (!code.c_dual().is_codeword(c_dual_sample)) {
        throw InvalidInput("branch sample is not a codeword of C^perp");
    }
    BitVec core = c_dual_sample ^ code.logical_basis().representative(logical_index) ^ code.d().generator().to_bits(code.n());
    BitVec extended = extend_core(core, code.a_l(), code.a_r());
    return EncodedFrame{logical_index, std::move(core), std::move(extended)};
}

BitVec qsync::random_c_dual_element(const QsyncCode &code, Rng &rng) {
    BitVec result(code.n());
    for (const auto &row : code.c_dual_rows()) {
        if (rng.next() & 1) {
            result ^= row;
        }
    }
    return result;
}

ChannelEffect qsync::no_errors(const QsyncCode &code, int64_t slip) {
    return ChannelEffect{BitVec(code.n_ext()), BitVec(code.n_ext()), slip};
}

int64_t qsync::min_simulable_slip(const QsyncCode &code) {
    return static_cast<int64_t>(code.a_r()) - static_cast<int64_t>(code.n_ext());
}

int64_t qsync::max_simulable_slip(const QsyncCode &code) {
    return static_cast<int64_t>(code.n_ext()) - static_cast<int64_t>(code.a_l());
}

NoisyStream qsync::apply_channel(const EncodedFrame &frame, const ChannelEffect &effect) {
    size_t n_ext = frame.extended.size();
    return apply_channel(frame, effect, BitVec(n_ext), BitVec(n_ext));
}

NoisyStream qsync::apply_channel(const EncodedFrame &frame, const ChannelEffect &effect, const BitVec &prev_block,
                                 const BitVec &next_block) {
    size_t n_ext = frame.extended.size();
    require_length(effect.bit_flips, n_ext, "bit-flip vector");
    require_length(effect.phase_flips, n_ext, "phase-flip vector");
    require_length(prev_block, n_ext, "previous block");
    require_length(next_block, n_ext, "next block");
    NoisyStream out{BitVec(3 * n_ext), BitVec(3 * n_ext), n_ext, effect.slip};
    out.bits.assign_range(0, prev_block);
    out.bits.assign_range(n_ext, frame.extended ^ effect.bit_flips);
    out.bits.assign_range(2 * n_ext, next_block);
    out.phase_flips.assign_range(n_ext, effect.phase_flips);
    return out;
}

WindowDecode qsync::decode_stage1_window(const QsyncCode &code, const NoisyStream &noisy) {
    if (noisy.slip < min_simulable_slip(code) || noisy.slip > max_simulable_slip(code)) {
        throw InvalidInput("slip " + std::to_string(noisy.slip) + " outside the simulated line");
    }
    size_t start = static_cast<size_t>(static_cast<int64_t>(noisy.block_start + code.a_l()) + noisy.slip);
    WindowDecode out;
    out.raw = noisy.bits.slice(start, code.n());
    auto correction = code.bit_decoder().decode(code.bit_decoder().syndrome(out.raw));
    if (!correction) {
        return out;
    }
    out.decoded = true;
    out.correction = *correction;
    out.corrected = out.raw ^ out.correction;
    return out;
}

SyncOutcome qsync::decode_stage2_sync(const QsyncCode &code, const BitVec &corrected_window) {
    require_length(corrected_window, code.n(), "window");
    return sync_syndrome(code, RingElement(code.n(), corrected_window));
}

OuterDecode qsync::decode_stage3_outer(const QsyncCode &code, const BitVec &block_bits) {
    size_t n = code.n();
    require_length(block_bits, code.n_ext(), "block");
    OuterDecode out;
    out.correction = BitVec(code.n_ext());
    BitVec working = block_bits;
    for (size_t offset : {code.a_l() + code.a_r(), size_t{0}}) {
        auto fix = code.bit_decoder().decode(code.bit_decoder().syndrome(working.slice(offset, n)));
        if (!fix) {
            return out;
        }
        BitVec placed(code.n_ext());
        placed.assign_range(offset, *fix);
        working ^= placed;
        out.correction ^= placed;
    }
    out.decoded = true;
    return out;
}

BitVec qsync::fold_phase(const BitVec &block_phase_flips, size_t n, size_t a_l, size_t a_r) {
    require_length(block_phase_flips, n + a_l + a_r, "phase-flip vector");
    BitVec folded = block_phase_flips.slice(a_l, n);
    for (size_t j = 0; j < a_l; j++) {
        if (block_phase_flips.get(j)) {
            folded.flip(n - a_l + j);
        }
    }
    for (size_t j = 0; j < a_r; j++) {
        if (block_phase_flips.get(a_l + n + j)) {
            folded.flip(j);
        }
    }
    return folded;
}

PhaseDecode qsync::decode_stage4_phase(const QsyncCode &code, const BitVec &block_phase_flips) {
    PhaseDecode out;
    out.folded = fold_phase(block_phase_flips, code.n(), code.a_l(), code.a_r());
    out.syndrome = code.phase_decoder().syndrome(out.folded);
    auto correction = code.phase_decoder().decode(out.syndrome);
    if (!correction) {
        out.correction = BitVec(code.n());
        return out;
    }
    out.decoded = true;
    out.correction = *correction;
    out.residual_in_c_dual = code.c_dual().is_codeword(out.folded ^ out.correction);
    return out;
}

bool qsync::is_harmless_bit_residual(const QsyncCode &code, const BitVec &block_residual) {
    require_length(block_residual, code.n_ext(), "residual");
    BitVec core = block_residual.slice(code.a_l(), code.n());
    return extend_core(core, code.a_l(), code.a_r()) == block_residual && code.c_dual().is_codeword(core);
}

DecodeReport qsync::run_pipeline_on_branch(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect,
                                           const BitVec &c_dual_sample, const BitVec &prev_block, const BitVec &next_block) {
    size_t n = code.n();
    size_t n_ext = code.n_ext();
    EncodedFrame frame = encode(code, logical_index, c_dual_sample);
    NoisyStream noisy = apply_channel(frame, effect, prev_block, next_block);
    BitVec bit_errors_on_line(3 * n_ext);
    bit_errors_on_line.assign_range(n_ext, effect.bit_flips);

    DecodeReport report;
    report.window_bit_correction = BitVec(n);
    report.outer_bit_correction = BitVec(n_ext);
    report.total_bit_correction = BitVec(n_ext);
    report.folded_phase = BitVec(n);
    report.phase_syndrome = BitVec(code.phase_decoder().parity_check().num_rows());
    report.phase_correction = BitVec(n);

    WindowDecode stage1 = decode_stage1_window(code, noisy);
    if (!stage1.decoded) {
        report.status = DecodeStatus::bit_failure;
        return report;
    }
    report.window_bit_correction = stage1.correction;
    size_t window_start = static_cast<size_t>(static_cast<int64_t>(noisy.block_start + code.a_l()) + effect.slip);
    BitVec line = noisy.bits;
    BitVec stage1_on_line(3 * n_ext);
    stage1_on_line.assign_range(window_start, stage1.correction);
    line ^= stage1_on_line;

    SyncOutcome sync = decode_stage2_sync(code, stage1.corrected);
    if (!sync.slip) {
        report.status = DecodeStatus::sync_failure;
        return report;
    }
    int64_t estimate = *sync.slip;
    report.slip_estimate = estimate;
    bool slip_correct = estimate == effect.slip;

    // The decoder places the block relative to its own window; with a wrong estimate this is
    // a shifted stretch of the line.
    size_t located = static_cast<size_t>(static_cast<int64_t>(window_start) - static_cast<int64_t>(code.a_l()) - estimate);
    OuterDecode stage3 = decode_stage3_outer(code, line.slice(located, n_ext));
    BitVec stage1_in_block(n_ext);
    stage1_in_block.assign_range(static_cast<size_t>(static_cast<int64_t>(code.a_l()) + estimate), stage1.correction);
    report.outer_bit_correction = stage3.correction;
    report.total_bit_correction = stage1_in_block ^ stage3.correction;
    if (!stage3.decoded) {
        report.status = slip_correct ? DecodeStatus::bit_failure : DecodeStatus::sync_failure;
        return report;
    }

    PhaseDecode stage4 = decode_stage4_phase(code, noisy.phase_flips.slice(located, n_ext));
    report.folded_phase = stage4.folded;
    report.phase_syndrome = stage4.syndrome;
    report.phase_correction = stage4.correction;

    if (!slip_correct) {
        report.status = DecodeStatus::sync_failure;
        return report;
    }
    BitVec residual = bit_errors_on_line.slice(located, n_ext) ^ report.total_bit_correction;
    bool degenerate = false;
    if (residual.any()) {
        if (!is_harmless_bit_residual(code, residual)) {
            report.status = DecodeStatus::bit_failure;
            return report;
        }
        degenerate = true;
    }
    if (!stage4.decoded || !stage4.residual_in_c_dual) {
        report.status = DecodeStatus::phase_failure;
        return report;
    }
    report.status = degenerate ? DecodeStatus::degenerate_success : DecodeStatus::success;
    return report;
}

DecodeReport qsync::run_pipeline(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, uint64_t branch_seed) {
    Rng rng(branch_seed);
    BitVec sample = random_c_dual_element(code, rng);
    uint64_t logical_mask = code.k_logical() >= 64 ? ~uint64_t{0} : (uint64_t{1} << code.k_logical()) - 1;
    auto neighbour = [&] {
        uint64_t idx = rng.next() & logical_mask;
        return encode(code, idx, random_c_dual_element(code, rng)).extended;
    };
    BitVec prev = neighbour();
    BitVec next = neighbour();
    return run_pipeline_on_branch(code, logical_index, effect, sample, prev, next);
}

std::vector<size_t> qsync::window_bit_weights(const QsyncCode &code, const BitVec &bit_flips) {
    require_length(bit_flips, code.n_ext(), "bit-flip vector");
    std::vector<size_t> weights;
    for (size_t offset = 0; offset <= code.a_l() + code.a_r(); offset++) {
        weights.push_back(bit_flips.slice(offset, code.n()).popcount());
    }
    return weights;
}

bool qsync::within_guarantee(const QsyncCode &code, const ChannelEffect &effect) {
    if (!code.slip_in_range(effect.slip) || effect.phase_flips.popcount() > code.phase_radius()) {
        return false;
    }
    for (size_t w : window_bit_weights(code, effect.bit_flips)) {
        if (w > code.bit_radius()) {
            return false;
        }
    }
    return true;
}
