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

#include "qsync/qsync_code.h"

#include "qsync/errors.h"
#include "qsync/gf2_matrix.h"

using namespace qsync;

BitVec LogicalBasis::representative(uint64_t index) const {
    BitVec result(n_);
    for (size_t j = 0; j < complement_.size() && j < 64; j++) {
        if ((index >> j) & 1) {
            result ^= complement_[j];
        }
    }
    return result;
}

std::vector<BitVec> LogicalBasis::representatives() const {
    if (k_logical() > 20) {
        throw BudgetExceeded("refusing to list 2^" + std::to_string(k_logical()) + " coset representatives",
                             double(uint64_t{1} << std::min<size_t>(k_logical(), 63)));
    }
    std::vector<BitVec> result;
    for (uint64_t i = 0; i < (uint64_t{1} << k_logical()); i++) {
        result.push_back(representative(i));
    }
    return result;
}

LogicalBasis qsync::canonical_representatives(const CyclicCode &c) {
    if (!is_dual_containing(c)) {
        throw InvalidInput("coset representatives of C/C^perp need a dual-containing C");
    }
    RowEchelonBasis basis(c.n());
    for (const auto &row : dual(c).generator_rows()) {
        basis.insert(row);
    }
    std::vector<BitVec> complement;
    for (const auto &row : c.generator_rows()) {
        BitVec residue = basis.reduce(row);
        if (residue.any()) {
            basis.insert(residue);
            complement.push_back(std::move(residue));
        }
    }
    if (complement.size() != 2 * c.k() - c.n()) {
        throw std::logic_error("complement of C^perp in C has the wrong dimension");
    }
    return LogicalBasis(c.n(), std::move(complement));
}

size_t qsync::orbit_length(const BitPoly &g, size_t n) {
    RingElement start = RingElement::from_poly(g, n);
    RingElement cur = start.times_x_pow(1);
    size_t count = 1;
    while (!(cur == start)) {
        cur = cur.times_x_pow(1);
        count++;
    }
    return count;
}

QsyncCode QsyncCode::build(const CyclicCode &c, const CyclicCode &d, int64_t a_l, int64_t a_r) {
    if (c.n() != d.n()) {
        throw PreconditionViolation("C and D have equal length", "n1=" + std::to_string(c.n()) + ", n2=" + std::to_string(d.n()));
    }
    size_t n = c.n();
    if (n % 2 == 0) {
        throw InvalidInput("code length must be odd, got n=" + std::to_string(n));
    }
    if (a_l < 0 || a_r < 0) {
        throw PreconditionViolation("a_l, a_r nonnegative", "a_l=" + std::to_string(a_l) + ", a_r=" + std::to_string(a_r));
    }
    if (!is_dual_containing(c)) {
        throw PreconditionViolation("C dual-containing", "C^perp is not contained in C=<" + c.generator().pretty() + ">");
    }
    if (!contains(d, c)) {
        throw PreconditionViolation("D is C-containing", "g_D=" + d.generator().pretty() + " does not divide g_C=" + c.generator().pretty());
    }
    if (!(c.k() < d.k())) {
        throw PreconditionViolation("k1 < k2", "k1=" + std::to_string(c.k()) + ", k2=" + std::to_string(d.k()));
    }
    if (2 * c.k() <= n) {
        throw PreconditionViolation("2k1 - n >= 1", "no logical qubits");
    }
    size_t budget = d.k() - c.k();
    if (static_cast<size_t>(a_l + a_r) >= budget) {
        throw PreconditionViolation("a_l + a_r < k2 - k1", "a_l + a_r = " + std::to_string(a_l + a_r) +
                                                             " but k2 - k1 = " + std::to_string(budget));
    }

    QsyncCode code;
    code.c_ = with_best_known_distance(c);
    code.d_ = with_best_known_distance(d);
    code.c_dual_ = dual(c);
    code.a_l_ = static_cast<size_t>(a_l);
    code.a_r_ = static_cast<size_t>(a_r);

    auto dm = poly_divmod(c.generator(), d.generator());
    if (!dm.remainder.is_zero() || dm.quotient.degree() != static_cast<int>(budget)) {
        throw std::logic_error("g_C / g_D is not exact with degree k2 - k1");
    }
    code.f_ = dm.quotient;

    if (orbit_length(d.generator(), n) != n) {
        throw std::logic_error("orbit of g_D under cyclic shifts is shorter than n");
    }

    for (int64_t a = -a_l; a <= a_r; a++) {
        BitPoly rem = x_pow_mod(-a, code.f_, n);
        auto [it, inserted] = code.slip_by_remainder_.emplace(rem.to_bits(n), a);
        if (!inserted) {
            throw std::logic_error("sync table is not injective");
        }
        code.sync_table_.emplace_back(a, std::move(rem));
    }

    code.c_dual_rows_ = code.c_dual_.generator_rows();
    code.logical_basis_ = std::make_shared<const LogicalBasis>(canonical_representatives(c));
    code.bit_decoder_ = std::make_shared<const SyndromeDecoder>(code.d_);
    code.phase_decoder_ = std::make_shared<const SyndromeDecoder>(code.c_);
    return code;
}

std::optional<int64_t> QsyncCode::slip_for_remainder(const BitPoly &remainder) const {
    if (remainder.degree() >= static_cast<int>(n())) {
        return std::nullopt;
    }
    auto it = slip_by_remainder_.find(remainder.to_bits(n()));
    if (it == slip_by_remainder_.end()) {
        return std::nullopt;
    }
    return it->second;
}

BitVec QsyncCode::c_dual_element(uint64_t index) const {
    BitVec result(n());
    for (size_t j = 0; j < c_dual_rows_.size() && j < 64; j++) {
        if ((index >> j) & 1) {
            result ^= c_dual_rows_[j];
        }
    }
    return result;
}

SyncOutcome qsync::sync_syndrome(const QsyncCode &code, const RingElement &window) {
    if (window.n() != code.n()) {
        throw InvalidInput("window length " + std::to_string(window.n()) + " does not match n=" + std::to_string(code.n()));
    }
    SyncOutcome out;
    auto by_g = poly_divmod(window.to_poly(), code.d().generator());
    if (!by_g.remainder.is_zero()) {
        return out;
    }
    out.exact_division = true;
    out.remainder = poly_mod(by_g.quotient, code.f());
    out.slip = code.slip_for_remainder(out.remainder);
    return out;
}
