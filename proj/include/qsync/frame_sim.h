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

#ifndef QSYNC_FRAME_SIM_H
#define QSYNC_FRAME_SIM_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qsync/qsync_code.h"
#include "qsync/rng.h"

namespace qsync {

// Symbolic simulation of encode -> Pauli channel with slip -> four-stage decode.
//
// Pauli X/Z errors on CSS coset states act classically: X flips the computational-basis
// content of every branch identically and Z only contributes signs. The simulator therefore
// carries one basis branch (C^perp sample + representative + g_D) plus the error vectors.

enum class DecodeStatus {
    success,
    degenerate_success,
    bit_failure,
    sync_failure,
    phase_failure,
};
constexpr size_t NUM_DECODE_STATUSES = 5;

const char *status_name(DecodeStatus status);
std::optional<DecodeStatus> parse_status(std::string_view name);
inline bool is_success(DecodeStatus status) {
    return status == DecodeStatus::success || status == DecodeStatus::degenerate_success;
}

/// Copies the last a_l core bits in front and the first a_r core bits behind.
BitVec extend_core(const BitVec &core, size_t a_l, size_t a_r);

struct EncodedFrame {
    uint64_t logical_index;
    /// c_dual_sample + r_logical_index + g_D.
    BitVec core;
    /// n_ext bits: core with its wrap-around copies.
    BitVec extended;
};

/// Throws InvalidInput if the sample is not in C^perp.
EncodedFrame encode(const QsyncCode &code, uint64_t logical_index, const BitVec &c_dual_sample);
BitVec random_c_dual_element(const QsyncCode &code, Rng &rng);

struct ChannelEffect {
    /// X flips on the n_ext qubits of the block.
    BitVec bit_flips;
    /// Z flips on the n_ext qubits of the block.
    BitVec phase_flips;
    /// Device misalignment to the right; negative means to the left.
    int64_t slip = 0;
};

ChannelEffect no_errors(const QsyncCode &code, int64_t slip = 0);

/// Slips the simulator can place on the three-block line (range wider than the code's tolerance).
int64_t min_simulable_slip(const QsyncCode &code);
int64_t max_simulable_slip(const QsyncCode &code);

/// The line as the device meets it: previous block, noisy block under test, next block.
struct NoisyStream {
    BitVec bits;
    BitVec phase_flips;
    /// Stream position of the block's first qubit (= n_ext).
    size_t block_start;
    int64_t slip;
};

/// Neighbours default to idle |0> qubits.
NoisyStream apply_channel(const EncodedFrame &frame, const ChannelEffect &effect);
NoisyStream apply_channel(const EncodedFrame &frame, const ChannelEffect &effect, const BitVec &prev_block, const BitVec &next_block);

struct WindowDecode {
    BitVec raw;
    /// Empty (size 0) when the syndrome has no leader within the decoding radius.
    BitVec correction;
    BitVec corrected;
    bool decoded = false;
};

/// The length-n window the misaligned device reads at a_l + slip, decoded with D.
WindowDecode decode_stage1_window(const QsyncCode &code, const NoisyStream &noisy);
/// Sync recovery on a bit-error-free window.
SyncOutcome decode_stage2_sync(const QsyncCode &code, const BitVec &corrected_window);

struct OuterDecode {
    /// n_ext-bit correction in block coordinates.
    BitVec correction;
    bool decoded = false;
};

/// Decodes the last-n and then the first-n window of the (believed) block.
OuterDecode decode_stage3_outer(const QsyncCode &code, const BitVec &block_bits);

/// e_c + (0^(n-a_l) || e_l) + (e_r || 0^(n-a_r)) for e = (e_l, e_c, e_r).
BitVec fold_phase(const BitVec &block_phase_flips, size_t n, size_t a_l, size_t a_r);

struct PhaseDecode {
    BitVec folded;
    BitVec syndrome;
    BitVec correction;
    bool decoded = false;
    bool residual_in_c_dual = false;
};

PhaseDecode decode_stage4_phase(const QsyncCode &code, const BitVec &block_phase_flips);

struct DecodeReport {
    DecodeStatus status = DecodeStatus::bit_failure;
    std::optional<int64_t> slip_estimate;
    BitVec window_bit_correction;
    BitVec outer_bit_correction;
    /// Stage 1 and stage 3 corrections together, in the coordinates of the block the decoder
    /// located (the true block when the slip estimate is right).
    BitVec total_bit_correction;
    BitVec folded_phase;
    BitVec phase_syndrome;
    BitVec phase_correction;
};

/// Residual X pattern on the block that acts as an X-stabilizer after un-extension.
bool is_harmless_bit_residual(const QsyncCode &code, const BitVec &block_residual);

/// Runs all four stages on one pinned branch and judges against the ground truth in `effect`.
DecodeReport run_pipeline_on_branch(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect,
                                    const BitVec &c_dual_sample, const BitVec &prev_block, const BitVec &next_block);

/// Branch and neighbouring blocks drawn from branch_seed.
DecodeReport run_pipeline(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, uint64_t branch_seed);

/// Bit-flip weight of every length-n window of the block, offsets 0 .. a_l + a_r.
std::vector<size_t> window_bit_weights(const QsyncCode &code, const BitVec &bit_flips);

/// Slip in range, total phase weight <= phase radius and every length-n window carries at most
/// bit-radius flips: the regime in which the decoder guarantees success.
bool within_guarantee(const QsyncCode &code, const ChannelEffect &effect);

}  // namespace qsync

#endif
