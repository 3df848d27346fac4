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

#include <set>

#include "doctest.h"
#include "oracles.h"
#include "qsync/errors.h"
#include "qsync/frame_sim.h"
#include "qsync/qsync_code.h"

using namespace qsync;

namespace {

uint64_t packed(const BitPoly &p) {
    return p.words().empty() ? 0 : p.words()[0];
}

CyclicCode hamming7() {
    return CyclicCode::from_generator(7, BitPoly::from_pretty("x^3+x+1"));
}

CyclicCode full7() {
    return CyclicCode::from_generator(7, BitPoly::one());
}

QsyncCode code9() {
    return QsyncCode::build(hamming7(), full7(), 1, 1);
}

QsyncCode code40() {
    return QsyncCode::build(bch_code(5, 7), bch_code(5, 3), 4, 5);
}

std::string clause_of(const CyclicCode &c, const CyclicCode &d, int64_t a_l, int64_t a_r) {
    try {
        QsyncCode::build(c, d, a_l, a_r);
    } catch (const PreconditionViolation &e) {
        return e.clause;
    }
    return "";
}

/// Window the device reads at slip a: the extended frame from position a_l + a.
BitVec window_at(const QsyncCode &code, const BitVec &core, int64_t a) {
    BitVec ext = extend_core(core, code.a_l(), code.a_r());
    return ext.slice(static_cast<size_t>(static_cast<int64_t>(code.a_l()) + a), code.n());
}

}  // namespace

TEST_CASE("(1,1)-[[9,1]] from Hamming [7,4] and the full space") {
    QsyncCode q = code9();
    CHECK(q.n_ext() == 9);
    CHECK(q.k_logical() == 1);
    CHECK(q.f() == BitPoly::from_pretty("x^3+x+1"));
    CHECK(q.d1() == 3);
    CHECK(q.d2() == 1);
    CHECK(q.phase_radius() == 1);
    CHECK(q.bit_radius() == 0);
    // Remainder of the window at slip a is x^(-a) mod f; frozen from oracle::x_pow_mod.
    REQUIRE(q.sync_table().size() == 3);
    CHECK(q.sync_table()[0] == std::pair<int64_t, BitPoly>{-1, BitPoly::from_pretty("x")});
    CHECK(q.sync_table()[1] == std::pair<int64_t, BitPoly>{0, BitPoly::one()});
    CHECK(q.sync_table()[2] == std::pair<int64_t, BitPoly>{1, BitPoly::from_pretty("x^2+1")});
    for (const auto &[a, rem] : q.sync_table()) {
        CHECK(packed(rem) == oracle::x_pow_mod(-a, 0xb, 7));
    }
}

TEST_CASE("(4,5)-[[40,1]] from BCH [31,16,7] and [31,26,3]") {
    QsyncCode q = code40();
    CHECK(q.n_ext() == 40);
    CHECK(q.k_logical() == 1);
    CHECK(q.k1() == 16);
    CHECK(q.k2() == 26);
    CHECK(q.f().degree() == 10);
    CHECK(q.f() * q.d().generator() == q.c().generator());
    CHECK(q.f().hex() == "c304");
    CHECK(q.sync_table().size() == 10);
    std::vector<std::string> frozen = {"10", "08", "04", "02", "01", "6102", "5103", "c903", "8503", "a303"};
    for (size_t i = 0; i < frozen.size(); i++) {
        const auto &[a, rem] = q.sync_table()[i];
        CHECK(a == static_cast<int64_t>(i) - 4);
        CHECK(rem.hex() == frozen[i]);
        CHECK(packed(rem) == oracle::x_pow_mod(-a, 0x4c3, 31));
    }
}

TEST_CASE("a_l = a_r = 0 is a plain CSS code") {
    QsyncCode q = QsyncCode::build(hamming7(), full7(), 0, 0);
    CHECK(q.sync_table().size() == 1);
    CHECK(q.sync_table()[0].second == BitPoly::one());
}

TEST_CASE("construction clauses") {
    CHECK(clause_of(hamming7(), CyclicCode::from_generator(15, BitPoly::one()), 1, 1) == "C and D have equal length");
    CHECK(clause_of(hamming7(), full7(), -1, 1) == "a_l, a_r nonnegative");
    CHECK(clause_of(dual(hamming7()), full7(), 0, 0) == "C dual-containing");
    CHECK(clause_of(hamming7(), CyclicCode::from_generator(7, BitPoly::from_pretty("x^3+x^2+1")), 0, 0) == "D is C-containing");
    CHECK(clause_of(hamming7(), hamming7(), 0, 0) == "k1 < k2");
    CHECK(clause_of(hamming7(), full7(), 2, 1) == "a_l + a_r < k2 - k1");
    CHECK(clause_of(bch_code(5, 5), bch_code(5, 3), 5, 0) == "a_l + a_r < k2 - k1");
    CHECK(clause_of(bch_code(5, 7), bch_code(5, 3), 5, 5) == "a_l + a_r < k2 - k1");
    CHECK(clause_of(bch_code(5, 7), bch_code(5, 3), 0, 9) == "");
    CHECK_THROWS_AS(QsyncCode::build(CyclicCode::from_generator(4, BitPoly::one()), CyclicCode::from_generator(4, BitPoly::one()), 0, 0),
                    InvalidInput);
}

TEST_CASE("orbit length") {
    CHECK(orbit_length(BitPoly::one(), 7) == 7);
    CHECK(orbit_length(xn_minus_1(7), 7) == 1);
    CHECK(orbit_length(BitPoly::from_pretty("x^6+x^5+x^4+x^3+x^2+x+1"), 7) == 1);
    CHECK(orbit_length(bch_code(5, 3).generator(), 31) == 31);
    CHECK(orbit_length(BitPoly::from_pretty("x^4+x^3+x^2+x+1"), 15) == 15);
    CHECK(orbit_length(BitPoly::from_pretty("x^10+x^5+1"), 15) == 5);
}

TEST_CASE("canonical representatives of Hamming [7,4]") {
    LogicalBasis basis = canonical_representatives(hamming7());
    CHECK(basis.k_logical() == 1);
    auto reps = basis.representatives();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].none());
    CyclicCode c = hamming7();
    CyclicCode cd = dual(c);
    CHECK(c.is_codeword(reps[1]));
    CHECK(!cd.is_codeword(reps[1]));
}

TEST_CASE("representatives label distinct cosets") {
    QsyncCode q = QsyncCode::build(CyclicCode::from_generator(15, BitPoly::from_pretty("x^4+x+1")), CyclicCode::from_generator(15, BitPoly::one()),
                                   1, 1);
    CHECK(q.k_logical() == 7);
    auto reps = q.logical_basis().representatives();
    CHECK(reps.size() == 128);
    std::set<std::string> classes;
    for (const auto &r : reps) {
        CHECK(q.c().is_codeword(r));
        // Smallest member of r + C^perp as a coset label.
        std::string best = r.str();
        for (uint64_t i = 1; i < (uint64_t{1} << q.c_dual_rows().size()); i++) {
            std::string s = (r ^ q.c_dual_element(i)).str();
            best = std::min(best, s);
        }
        classes.insert(best);
    }
    CHECK(classes.size() == 128);
}

TEST_CASE("sync syndrome round trip, exhaustive for n = 7") {
    QsyncCode q = code9();
    size_t branches = size_t{1} << q.c_dual_rows().size();
    CHECK(branches == 8);
    for (uint64_t logical = 0; logical < 2; logical++) {
        for (uint64_t b = 0; b < branches; b++) {
            BitVec core = encode(q, logical, q.c_dual_element(b)).core;
            for (int64_t a = q.min_slip(); a <= q.max_slip(); a++) {
                SyncOutcome out = sync_syndrome(q, RingElement(7, window_at(q, core, a)));
                CHECK(out.exact_division);
                CHECK(out.slip == std::optional<int64_t>(a));
            }
        }
    }
}

TEST_CASE("sync syndrome round trip on the [[40,1]] code") {
    QsyncCode q = code40();
    Rng rng(2024);
    for (uint64_t logical = 0; logical < 2; logical++) {
        for (int trial = 0; trial < 100; trial++) {
            BitVec core = encode(q, logical, random_c_dual_element(q, rng)).core;
            for (int64_t a = q.min_slip(); a <= q.max_slip(); a++) {
                CHECK(sync_syndrome(q, RingElement(31, window_at(q, core, a))).slip == std::optional<int64_t>(a));
            }
        }
    }
}

TEST_CASE("sync syndrome edge cases") {
    QsyncCode q = code9();
    BitVec core = encode(q, 0, BitVec(7)).core;
    CHECK(sync_syndrome(q, RingElement(7, core)).slip == std::optional<int64_t>(0));
    // Slip a_r + 1 is outside the table: x^(-2) mod f = x^2 + x + 1 is not an entry.
    SyncOutcome beyond = sync_syndrome(q, RingElement(7, core.rotated_left(2)));
    CHECK(beyond.exact_division);
    CHECK(!beyond.slip.has_value());
    CHECK(beyond.remainder == BitPoly::from_pretty("x^2+x+1"));

    QsyncCode q40 = code40();
    BitVec bad = encode(q40, 0, BitVec(31)).core;
    bad.flip(3);
    SyncOutcome inexact = sync_syndrome(q40, RingElement(31, bad));
    CHECK(!inexact.exact_division);
    CHECK(!inexact.slip.has_value());
}
