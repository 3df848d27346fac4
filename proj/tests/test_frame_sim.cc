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

#include "doctest.h"
#include "qsync/errors.h"
#include "qsync/frame_sim.h"

using namespace qsync;

namespace {

QsyncCode code9() {
    return QsyncCode::build(CyclicCode::from_generator(7, BitPoly::from_pretty("x^3+x+1")), CyclicCode::from_generator(7, BitPoly::one()),
                            1, 1);
}

QsyncCode code40() {
    return QsyncCode::build(bch_code(5, 7), bch_code(5, 3), 4, 5);
}

ChannelEffect effect_with(const QsyncCode &code, int64_t slip, std::initializer_list<size_t> bits, std::initializer_list<size_t> phases) {
    return ChannelEffect{BitVec::from_indices(code.n_ext(), bits), BitVec::from_indices(code.n_ext(), phases), slip};
}

}  // namespace

TEST_CASE("status names") {
    for (size_t s = 0; s < NUM_DECODE_STATUSES; s++) {
        auto status = static_cast<DecodeStatus>(s);
        CHECK(parse_status(status_name(status)) == std::optional<DecodeStatus>(status));
    }
    CHECK(!parse_status("fine").has_value());
    CHECK(is_success(DecodeStatus::degenerate_success));
    CHECK(!is_success(DecodeStatus::sync_failure));
}

TEST_CASE("extension copies the core edges") {
    BitVec core = BitVec::from_string("1011001");
    CHECK(extend_core(core, 1, 1).str() == "110110011");
    CHECK(extend_core(core, 2, 3).str() == "011011001101");
    CHECK(extend_core(core, 0, 0) == core);
}

TEST_CASE("encoding") {
    QsyncCode q = code9();
    EncodedFrame zero = encode(q, 0, BitVec(7));
    CHECK(zero.core == q.d().generator().to_bits(7));
    CHECK(zero.extended.size() == 9);
    CHECK_THROWS_AS(encode(q, 0, BitVec::from_indices(7, {0})), InvalidInput);

    // Every branch of either logical value lies in C + g_D; the middle of the frame is the core.
    BitVec g = q.d().generator().to_bits(7);
    for (uint64_t logical = 0; logical < 2; logical++) {
        for (uint64_t b = 0; b < 8; b++) {
            EncodedFrame f = encode(q, logical, q.c_dual_element(b));
            CHECK(q.c().is_codeword(f.core ^ g));
            CHECK(q.d().is_codeword(f.core));
            CHECK(f.extended.slice(1, 7) == f.core);
        }
    }
}

TEST_CASE("every in-range window of a clean frame is a cyclic shift of the core") {
    for (const QsyncCode &q : {code9(), code40()}) {
        Rng rng(9);
        EncodedFrame f = encode(q, 1, random_c_dual_element(q, rng));
        for (size_t offset = 0; offset <= q.a_l() + q.a_r(); offset++) {
            int64_t a = static_cast<int64_t>(offset) - static_cast<int64_t>(q.a_l());
            BitVec expected = a >= 0 ? f.core.rotated_left(static_cast<size_t>(a)) : f.core.rotated_right(static_cast<size_t>(-a));
            CHECK(f.extended.slice(offset, q.n()) == expected);
        }
    }
}

TEST_CASE("channel application") {
    QsyncCode q = code9();
    EncodedFrame f = encode(q, 1, q.c_dual_element(3));
    NoisyStream clean = apply_channel(f, no_errors(q));
    CHECK(clean.bits.slice(clean.block_start, 9) == f.extended);
    NoisyStream one = apply_channel(f, effect_with(q, 0, {4}, {}));
    CHECK((one.bits ^ clean.bits).support() == std::vector<size_t>{9 + 4});
    NoisyStream phase = apply_channel(f, effect_with(q, 0, {}, {2, 5}));
    CHECK(phase.bits == clean.bits);
    CHECK(phase.phase_flips.popcount() == 2);
}

TEST_CASE("stage 1 corrects one flip in the window of the [[40,1]] code") {
    QsyncCode q = code40();
    EncodedFrame f = encode(q, 0, BitVec(31));
    CHECK(decode_stage1_window(q, apply_channel(f, no_errors(q))).correction.none());
    for (int64_t slip : {-4, 0, 5}) {
        size_t pos = static_cast<size_t>(static_cast<int64_t>(q.a_l()) + slip) + 17;
        WindowDecode w = decode_stage1_window(q, apply_channel(f, effect_with(q, slip, {pos}, {})));
        CHECK(w.decoded);
        CHECK(w.correction.support() == std::vector<size_t>{17});
        CHECK(decode_stage2_sync(q, w.corrected).slip == std::optional<int64_t>(slip));
    }
}

TEST_CASE("stage 2 slips of the [[9,1]] code") {
    QsyncCode q = code9();
    EncodedFrame f = encode(q, 0, BitVec(7));
    for (int64_t slip = -1; slip <= 1; slip++) {
        WindowDecode w = decode_stage1_window(q, apply_channel(f, no_errors(q, slip)));
        CHECK(decode_stage2_sync(q, w.corrected).slip == std::optional<int64_t>(slip));
    }
    WindowDecode m1 = decode_stage1_window(q, apply_channel(f, no_errors(q, -1)));
    CHECK(decode_stage2_sync(q, m1.corrected).remainder == BitPoly::from_pretty("x"));
}

TEST_CASE("stage 3 corrects the edge windows") {
    QsyncCode q = code40();
    EncodedFrame f = encode(q, 1, BitVec(31));
    BitVec noisy = f.extended;
    noisy.flip(0);
    noisy.flip(39);
    OuterDecode outer = decode_stage3_outer(q, noisy);
    CHECK(outer.decoded);
    CHECK(outer.correction.support() == std::vector<size_t>{0, 39});
}

TEST_CASE("phase folding") {
    BitVec e = BitVec::from_string("1" "0000000" "01");
    // e_l lands on core position n - a_l + 0 = 6, e_r on core position 1.
    CHECK(fold_phase(e, 7, 1, 2).str() == "0100001");
    BitVec both = BitVec::from_string("1" "0000001" "00");
    CHECK(fold_phase(both, 7, 1, 2).none());
}

TEST_CASE("stage 4 decodes folded phase errors") {
    QsyncCode q = code40();
    BitVec e(40);
    e.flip(0);
    e.flip(20);
    e.flip(39);
    PhaseDecode p = decode_stage4_phase(q, e);
    CHECK(p.decoded);
    CHECK(p.residual_in_c_dual);
    CHECK((p.folded ^ p.correction).none());
}

TEST_CASE("full pipeline statuses") {
    QsyncCode q = code40();
    CHECK(run_pipeline(q, 0, no_errors(q, 3), 1).status == DecodeStatus::success);
    CHECK(run_pipeline(q, 1, effect_with(q, -4, {0, 39}, {1, 2, 30}), 2).status == DecodeStatus::success);
    DecodeReport out_of_range = run_pipeline(q, 0, no_errors(q, 6), 3);
    CHECK(out_of_range.status == DecodeStatus::sync_failure);
    CHECK(out_of_range.slip_estimate != std::optional<int64_t>(6));
    CHECK(!is_success(run_pipeline(q, 0, effect_with(q, 0, {}, {4, 5, 6, 7}), 4).status));
    CHECK_THROWS_AS(run_pipeline(q, 0, no_errors(q, 99), 5), InvalidInput);
}

TEST_CASE("a successful report cancels the errors exactly") {
    QsyncCode q = code40();
    Rng rng(77);
    for (int trial = 0; trial < 300; trial++) {
        ChannelEffect e = no_errors(q, rng.between(-4, 5));
        e.bit_flips.flip(rng.below(40));
        for (int k = 0; k < 3; k++) {
            e.phase_flips.flip(rng.below(40));
        }
        if (!within_guarantee(q, e)) {
            continue;
        }
        DecodeReport r = run_pipeline(q, rng.below(2), e, rng.next());
        REQUIRE(r.status == DecodeStatus::success);
        CHECK(r.slip_estimate == std::optional<int64_t>(e.slip));
        CHECK(r.total_bit_correction == e.bit_flips);
        CHECK(q.c_dual().is_codeword(r.folded_phase ^ r.phase_correction));
    }
}

TEST_CASE("guarantee region") {
    QsyncCode q = code40();
    CHECK(within_guarantee(q, effect_with(q, 0, {0, 39}, {1, 2, 3})));
    CHECK(!within_guarantee(q, effect_with(q, 0, {10, 11}, {})));
    CHECK(!within_guarantee(q, effect_with(q, 0, {}, {1, 2, 3, 4})));
    CHECK(!within_guarantee(q, no_errors(q, 6)));
    CHECK(window_bit_weights(q, BitVec::from_indices(40, {0, 39})) == std::vector<size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("exhaustive [[9,1]] suite: phase weight <= 1, every branch and slip") {
    QsyncCode q = code9();
    size_t cases = 0;
    for (uint64_t logical = 0; logical < 2; logical++) {
        for (int64_t slip = -1; slip <= 1; slip++) {
            for (int p = -1; p < 9; p++) {
                ChannelEffect e = no_errors(q, slip);
                if (p >= 0) {
                    e.phase_flips.flip(static_cast<size_t>(p));
                }
                for (uint64_t b = 0; b < 8; b++) {
                    DecodeReport r = run_pipeline_on_branch(q, logical, e, q.c_dual_element(b), BitVec(9), BitVec(9));
                    CHECK(r.status == DecodeStatus::success);
                    cases++;
                }
            }
        }
    }
    CHECK(cases == 480);
}

TEST_CASE("harmless bit residuals") {
    QsyncCode q = code9();
    BitVec c_dual_word = q.c_dual_element(1);
    CHECK(is_harmless_bit_residual(q, extend_core(c_dual_word, 1, 1)));
    BitVec partial = extend_core(c_dual_word, 1, 1);
    partial.flip(0);
    CHECK(!is_harmless_bit_residual(q, partial));
    CHECK(!is_harmless_bit_residual(q, BitVec::from_indices(9, {4})));
}
