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

#ifndef QSYNC_CYCLIC_CODE_H
#define QSYNC_CYCLIC_CODE_H

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qsync/bitvec.h"
#include "qsync/gf2_poly.h"

namespace qsync {

struct Distance {
    enum class Kind { computed, designed };
    size_t value;
    Kind kind;
    bool operator==(const Distance &) const = default;
};

const char *distance_kind_name(Distance::Kind kind);

/// Binary cyclic code of length n, the ideal <g(x)> in GF(2)[x]/(x^n - 1).
class CyclicCode {
   public:
    /// Throws InvalidInput unless g is nonzero and divides x^n - 1.
    static CyclicCode from_generator(size_t n, const BitPoly &g);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return n_ - static_cast<size_t>(g_.degree());
    }
    const BitPoly &generator() const {
        return g_;
    }
    /// Check polynomial h(x) = (x^n - 1) / g(x).
    const BitPoly &check_polynomial() const {
        return h_;
    }

    const std::optional<Distance> &distance() const {
        return distance_;
    }
    CyclicCode with_distance(Distance d) const;

    /// Generator matrix rows x^i g(x), i < k.
    std::vector<BitVec> generator_rows() const;
    /// Codeword i(x) g(x) reduced into n coefficients.
    BitVec encode(const BitPoly &info) const;
    bool is_codeword(const BitVec &word) const;

    bool operator==(const CyclicCode &other) const {
        return n_ == other.n_ && g_ == other.g_;
    }

   private:
    CyclicCode(size_t n, BitPoly g, BitPoly h) : n_(n), g_(std::move(g)), h_(std::move(h)) {
    }
    size_t n_;
    BitPoly g_;
    BitPoly h_;
    std::optional<Distance> distance_;
};

/// Dual code, generated by the monic reciprocal of h(x).
CyclicCode dual(const CyclicCode &code);
/// outer contains inner iff g_outer divides g_inner. Throws on length mismatch.
bool contains(const CyclicCode &outer, const CyclicCode &inner);
bool is_dual_containing(const CyclicCode &code);

/// Primitive narrow-sense BCH code of length 2^m - 1: the generator is the lcm of the minimal
/// polynomials of alpha, ..., alpha^(designed_distance - 1). Carries a designed distance annotation.
CyclicCode bch_code(unsigned m, size_t designed_distance);

constexpr unsigned DISTANCE_ENUMERATION_MAX_K = 24;

/// Exact minimum distance by exhaustive search. Codes with k <= 24 enumerate all codewords
/// in Gray-code order; larger codes enumerate error patterns by increasing weight until one
/// has zero syndrome. Either route is capped at 2^24 candidates (BudgetExceeded beyond).
size_t min_distance_bruteforce(const CyclicCode &code);

/// Returns the code annotated with its brute-force distance, or with the designed distance
/// when enumeration is over budget and a designed value exists.
CyclicCode with_best_known_distance(const CyclicCode &code);

/// Full-rank (n - k) x n parity-check matrix: generator rows of the dual, row-reduced.
class ParityCheckMatrix {
   public:
    explicit ParityCheckMatrix(const CyclicCode &code);

    size_t n() const {
        return n_;
    }
    size_t num_rows() const {
        return rows_.size();
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    BitVec syndrome(const BitVec &word) const;

   private:
    size_t n_;
    std::vector<BitVec> rows_;
};

/// Bounded-distance decoder backed by a syndrome -> minimum-weight coset leader table
/// covering every error pattern of weight <= t.
class SyndromeDecoder {
   public:
    /// Radius defaults to floor((d - 1) / 2) from the code's distance annotation.
    explicit SyndromeDecoder(const CyclicCode &code);
    /// Throws InvalidInput if two patterns of weight <= t share a syndrome.
    SyndromeDecoder(const CyclicCode &code, size_t radius);

    const ParityCheckMatrix &parity_check() const {
        return parity_;
    }
    size_t radius() const {
        return radius_;
    }
    size_t table_size() const {
        return table_.size();
    }

    BitVec syndrome(const BitVec &word) const {
        return parity_.syndrome(word);
    }
    /// The unique error of weight <= t with this syndrome, or nullopt.
    std::optional<BitVec> decode(const BitVec &syndrome) const;

   private:
    ParityCheckMatrix parity_;
    size_t radius_;
    std::unordered_map<BitVec, BitVec, BitVecHash> table_;
};

/// Number of error patterns of weight <= t on n bits.
double ball_size(size_t n, size_t t);

}  // namespace qsync

#endif
