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

#include "qsync/cyclic_code.h"

#include <bit>
#include <functional>
#include <limits>

#include "qsync/errors.h"
#include "qsync/gf2_matrix.h"
#include "qsync/gf2m_field.h"

using namespace qsync;

namespace {

constexpr double ENUMERATION_BUDGET = double(uint64_t{1} << 24);
constexpr double DECODER_TABLE_BUDGET = double(uint64_t{1} << 22);

// Calls body(positions) for each w-subset of {0..n-1} in lexicographic order; stops when body returns true.
bool for_each_combination(size_t n, size_t w, const std::function<bool(const std::vector<size_t> &)> &body) {
    if (w > n) {
        return false;
    }
    std::vector<size_t> pos(w);
    for (size_t i = 0; i < w; i++) {
        pos[i] = i;
    }
    while (true) {
        if (body(pos)) {
            return true;
        }
        size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + (i - 1)) {
            i--;
        }
        if (i == 0) {
            return false;
        }
        pos[i - 1]++;
        for (size_t j = i; j < w; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

double binomial(size_t n, size_t r) {
    if (r > n) {
        return 0;
    }
    double result = 1;
    for (size_t i = 1; i <= r; i++) {
        result = result * double(n - r + i) / double(i);
    }
    return result;
}

size_t distance_by_codeword_enumeration(const CyclicCode &code) {
    auto rows = code.generator_rows();
    size_t best = std::numeric_limits<size_t>::max();
    uint64_t count = uint64_t{1} << code.k();
    if (code.n() <= 64) {
        std::vector<uint64_t> packed;
        for (const auto &r : rows) {
            packed.push_back(r.words().empty() ? 0 : r.words()[0]);
        }
        uint64_t word = 0;
        for (uint64_t i = 1; i < count; i++) {
            word ^= packed[std::countr_zero(i)];
            best = std::min<size_t>(best, std::popcount(word));
        }
    } else {
        BitVec word(code.n());
        for (uint64_t i = 1; i < count; i++) {
            word ^= rows[std::countr_zero(i)];
            best = std::min(best, word.popcount());
        }
    }
    return best;
}

size_t distance_by_low_weight_search(const CyclicCode &code) {
    ParityCheckMatrix parity(code);
    size_t n = code.n();
    std::vector<BitVec> columns;
    for (size_t j = 0; j < n; j++) {
        columns.push_back(parity.syndrome(BitVec::from_indices(n, {j})));
    }
    double spent = 0;
    for (size_t w = 1; w <= n; w++) {
        spent += binomial(n, w);
        if (spent > ENUMERATION_BUDGET) {
            throw BudgetExceeded("minimum distance search for [" + std::to_string(n) + "," + std::to_string(code.k()) +
                                     "] exceeds 2^24 candidates (k > " + std::to_string(DISTANCE_ENUMERATION_MAX_K) +
                                     " and no codeword of weight < " + std::to_string(w) + ")",
                                 spent);
        }
        BitVec acc(parity.num_rows());
        bool found = for_each_combination(n, w, [&](const std::vector<size_t> &pos) {
            acc.clear();
            for (size_t p : pos) {
                acc ^= columns[p];
            }
            return acc.none();
        });
        if (found) {
            return w;
        }
    }
    throw std::logic_error("nonzero code without a nonzero codeword");
}

}  // namespace

const char *qsync::distance_kind_name(Distance::Kind kind) {
    return kind == Distance::Kind::computed ? "computed" : "designed";
}

CyclicCode CyclicCode::from_generator(size_t n, const BitPoly &g) {
    if (n == 0) {
        throw InvalidInput("code length must be positive");
    }
    if (g.is_zero()) {
        throw InvalidInput("generator polynomial must be nonzero");
    }
    auto dm = poly_divmod(xn_minus_1(n), g);
    if (!dm.remainder.is_zero()) {
        throw InvalidInput("generator " + g.pretty() + " does not divide x^" + std::to_string(n) + "-1");
    }
    return CyclicCode(n, g, dm.quotient);
}

CyclicCode CyclicCode::with_distance(Distance d) const {
    CyclicCode result = *this;
    result.distance_ = d;
    return result;
}

std::vector<BitVec> CyclicCode::generator_rows() const {
    std::vector<BitVec> rows;
    for (size_t i = 0; i < k(); i++) {
        rows.push_back(g_.shifted(i).to_bits(n_));
    }
    return rows;
}

BitVec CyclicCode::encode(const BitPoly &info) const {
    return RingElement::from_poly(info * g_, n_).coeffs();
}

bool CyclicCode::is_codeword(const BitVec &word) const {
    if (word.size() != n_) {
        throw InvalidInput("word length mismatch");
    }
    // Elements of the ideal with degree < n are exactly the plain multiples of g.
    return poly_divides(g_, BitPoly::from_bits(word));
}

CyclicCode qsync::dual(const CyclicCode &code) {
    // h(0) = 1 because x does not divide x^n - 1, so the reciprocal is already monic.
    return CyclicCode::from_generator(code.n(), reciprocal(code.check_polynomial()));
}

bool qsync::contains(const CyclicCode &outer, const CyclicCode &inner) {
    if (outer.n() != inner.n()) {
        throw InvalidInput("containment check between codes of different lengths");
    }
    return poly_divides(outer.generator(), inner.generator());
}

bool qsync::is_dual_containing(const CyclicCode &code) {
    if (2 * code.k() < code.n()) {
        return false;
    }
    return contains(code, dual(code));
}

CyclicCode qsync::bch_code(unsigned m, size_t designed_distance) {
    if (m < 3 || m > MAX_FIELD_DEGREE) {
        throw InvalidInput("BCH code needs 3 <= m <= " + std::to_string(MAX_FIELD_DEGREE) + ", got m=" + std::to_string(m));
    }
    size_t n = (size_t{1} << m) - 1;
    if (designed_distance < 3 || designed_distance % 2 == 0 || designed_distance > n) {
        throw InvalidInput("BCH designed distance must be odd with 3 <= d <= n=" + std::to_string(n) + ", got " +
                           std::to_string(designed_distance));
    }
    GF2mField field(m);
    std::vector<bool> covered(n, false);
    BitPoly g = BitPoly::one();
    for (size_t power = 1; power < designed_distance; power++) {
        if (covered[power]) {
            continue;
        }
        size_t j = power;
        do {
            covered[j] = true;
            j = (2 * j) % n;
        } while (j != power);
        g = g * minimal_polynomial(field, static_cast<int64_t>(power), static_cast<uint32_t>(n));
    }
    return CyclicCode::from_generator(n, g).with_distance({designed_distance, Distance::Kind::designed});
}

size_t qsync::min_distance_bruteforce(const CyclicCode &code) {
    if (code.k() == 0) {
        throw InvalidInput("the zero code has no nonzero codewords");
    }
    if (code.k() <= DISTANCE_ENUMERATION_MAX_K) {
        return distance_by_codeword_enumeration(code);
    }
    return distance_by_low_weight_search(code);
}

CyclicCode qsync::with_best_known_distance(const CyclicCode &code) {
    if (code.distance() && code.distance()->kind == Distance::Kind::computed) {
        return code;
    }
    try {
        return code.with_distance({min_distance_bruteforce(code), Distance::Kind::computed});
    } catch (const BudgetExceeded &) {
        if (code.distance()) {
            return code;
        }
        throw;
    }
}

ParityCheckMatrix::ParityCheckMatrix(const CyclicCode &code) : n_(code.n()) {
    RowEchelonBasis basis(n_);
    for (const auto &row : dual(code).generator_rows()) {
        basis.insert(row);
    }
    rows_ = basis.sorted_rows();
    if (rows_.size() != n_ - code.k()) {
        throw std::logic_error("parity-check matrix is not full rank");
    }
}

BitVec ParityCheckMatrix::syndrome(const BitVec &word) const {
    if (word.size() != n_) {
        throw InvalidInput("syndrome input has length " + std::to_string(word.size()) + ", expected " + std::to_string(n_));
    }
    BitVec s(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(word)) {
            s.set(r);
        }
    }
    return s;
}

double qsync::ball_size(size_t n, size_t t) {
    double total = 0;
    for (size_t w = 0; w <= t && w <= n; w++) {
        total += binomial(n, w);
    }
    return total;
}

SyndromeDecoder::SyndromeDecoder(const CyclicCode &code)
    : SyndromeDecoder(code, [&] {
          auto annotated = code.distance() ? code : with_best_known_distance(code);
          return (annotated.distance()->value - 1) / 2;
      }()) {
}

SyndromeDecoder::SyndromeDecoder(const CyclicCode &code, size_t radius) : parity_(code), radius_(radius) {
    size_t n = code.n();
    double cost = ball_size(n, radius);
    if (cost > DECODER_TABLE_BUDGET) {
        throw BudgetExceeded("syndrome table for n=" + std::to_string(n) + ", t=" + std::to_string(radius) + " needs " +
                                 std::to_string(cost) + " entries",
                             cost);
    }
    std::vector<BitVec> columns;
    for (size_t j = 0; j < n; j++) {
        columns.push_back(parity_.syndrome(BitVec::from_indices(n, {j})));
    }
    for (size_t w = 0; w <= radius && w <= n; w++) {
        for_each_combination(n, w, [&](const std::vector<size_t> &pos) {
            BitVec s(parity_.num_rows());
            for (size_t p : pos) {
                s ^= columns[p];
            }
            auto [it, inserted] = table_.emplace(std::move(s), BitVec::from_indices(n, pos));
            if (!inserted) {
                throw InvalidInput("decoding radius " + std::to_string(radius) + " exceeds the code's unique-decoding radius");
            }
            return false;
        });
    }
}

std::optional<BitVec> SyndromeDecoder::decode(const BitVec &syndrome) const {
    if (syndrome.size() != parity_.num_rows()) {
        throw InvalidInput("syndrome has length " + std::to_string(syndrome.size()) + ", expected " +
                           std::to_string(parity_.num_rows()));
    }
    auto it = table_.find(syndrome);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}
