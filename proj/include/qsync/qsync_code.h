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

#ifndef QSYNC_QSYNC_CODE_H
#define QSYNC_QSYNC_CODE_H

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qsync/cyclic_code.h"

namespace qsync {

/// Coset representatives of C / C^perp for a dual-containing C.
///
/// The complement basis comes from reducing the generator rows x^i g_C(x) (i ascending)
/// against a reduced echelon basis of C^perp; each row independent of C^perp and the rows
/// before it contributes its residue after that reduction. Representative i is the xor of the
/// complement rows selected by the binary digits of i, so representative 0 is zero.
class LogicalBasis {
   public:
    LogicalBasis(size_t n, std::vector<BitVec> complement) : n_(n), complement_(std::move(complement)) {
    }

    size_t n() const {
        return n_;
    }
    size_t k_logical() const {
        return complement_.size();
    }
    const std::vector<BitVec> &complement() const {
        return complement_;
    }
    /// Uses the low k_logical bits of `index`.
    BitVec representative(uint64_t index) const;
    /// All 2^k_logical representatives in index order. Requires k_logical <= 20.
    std::vector<BitVec> representatives() const;

   private:
    size_t n_;
    std::vector<BitVec> complement_;
};

LogicalBasis canonical_representatives(const CyclicCode &c);

/// Number of distinct cyclic shifts x^i g(x) mod x^n - 1.
size_t orbit_length(const BitPoly &g, size_t n);

/// Quantum synchronizable (a_l, a_r)-[[n + a_l + a_r, 2k1 - n]] code built from cyclic codes
/// C^perp <= C < D.
///
/// Slip convention: a device misaligned by `a` qubits to the right reads its middle window
/// starting at position a_l + a of the extended block, which is the core rotated left by a
/// (the ring element x^-a (s + r + g)). Dividing that window by g_D and the quotient by f
/// leaves x^-a mod f, so sync_table()[a] stores x^-a mod f.
class QsyncCode {
   public:
    /// Validates every construction clause, throwing PreconditionViolation naming the clause.
    static QsyncCode build(const CyclicCode &c, const CyclicCode &d, int64_t a_l, int64_t a_r);

    const CyclicCode &c() const {
        return c_;
    }
    const CyclicCode &d() const {
        return d_;
    }
    const CyclicCode &c_dual() const {
        return c_dual_;
    }
    /// g_C / g_D, of degree k2 - k1.
    const BitPoly &f() const {
        return f_;
    }
    size_t n() const {
        return c_.n();
    }
    size_t k1() const {
        return c_.k();
    }
    size_t k2() const {
        return d_.k();
    }
    size_t a_l() const {
        return a_l_;
    }
    size_t a_r() const {
        return a_r_;
    }
    size_t n_ext() const {
        return n() + a_l_ + a_r_;
    }
    size_t k_logical() const {
        return 2 * k1() - n();
    }
    size_t d1() const {
        return c_.distance()->value;
    }
    size_t d2() const {
        return d_.distance()->value;
    }
    /// floor((d1 - 1) / 2): guaranteed phase-error radius over the whole extended block.
    size_t phase_radius() const {
        return (d1() - 1) / 2;
    }
    /// floor((d2 - 1) / 2): guaranteed bit-error radius per length-n window.
    size_t bit_radius() const {
        return (d2() - 1) / 2;
    }

    int64_t min_slip() const {
        return -static_cast<int64_t>(a_l_);
    }
    int64_t max_slip() const {
        return static_cast<int64_t>(a_r_);
    }
    bool slip_in_range(int64_t slip) const {
        return slip >= min_slip() && slip <= max_slip();
    }
    /// (slip, remainder) for slip = -a_l .. a_r.
    const std::vector<std::pair<int64_t, BitPoly>> &sync_table() const {
        return sync_table_;
    }
    std::optional<int64_t> slip_for_remainder(const BitPoly &remainder) const;

    const LogicalBasis &logical_basis() const {
        return *logical_basis_;
    }
    /// Generator rows of C^perp; branch samples are combinations of these.
    const std::vector<BitVec> &c_dual_rows() const {
        return c_dual_rows_;
    }
    /// Element of C^perp selected by the binary digits of index over c_dual_rows().
    BitVec c_dual_element(uint64_t index) const;

    const SyndromeDecoder &bit_decoder() const {
        return *bit_decoder_;
    }
    const SyndromeDecoder &phase_decoder() const {
        return *phase_decoder_;
    }

   private:
    QsyncCode() = default;

    CyclicCode c_ = CyclicCode::from_generator(1, BitPoly::one());
    CyclicCode d_ = c_;
    CyclicCode c_dual_ = c_;
    BitPoly f_;
    size_t a_l_ = 0;
    size_t a_r_ = 0;
    std::vector<std::pair<int64_t, BitPoly>> sync_table_;
    std::unordered_map<BitVec, int64_t, BitVecHash> slip_by_remainder_;
    std::vector<BitVec> c_dual_rows_;
    std::shared_ptr<const LogicalBasis> logical_basis_;
    std::shared_ptr<const SyndromeDecoder> bit_decoder_;
    std::shared_ptr<const SyndromeDecoder> phase_decoder_;
};

struct SyncOutcome {
    /// Set when the window divided exactly by g_D and the remainder is in the sync table.
    std::optional<int64_t> slip;
    bool exact_division = false;
    /// Quotient mod f (empty when division was inexact).
    BitPoly remainder;
};

/// Two-step division of a bit-error-free window: quotient by g_D, then remainder mod f.
SyncOutcome sync_syndrome(const QsyncCode &code, const RingElement &window);

}  // namespace qsync

#endif
