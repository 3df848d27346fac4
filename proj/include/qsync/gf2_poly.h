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

#ifndef QSYNC_GF2_POLY_H
#define QSYNC_GF2_POLY_H

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsync/bitvec.h"

namespace qsync {

/// Polynomial over GF(2). Coefficient of x^i is bit i.
///
/// Always stored in canonical form (no zero high words), so structural equality
/// is polynomial equality. The zero polynomial has degree -1.
class BitPoly {
   public:
    BitPoly() = default;

    static BitPoly one() {
        return monomial(0);
    }
    static BitPoly monomial(size_t exponent);
    static BitPoly from_exponents(std::initializer_list<size_t> exponents);
    /// Low 64 coefficients packed into an integer, e.g. 0b1011 = x^3+x+1.
    static BitPoly from_u64(uint64_t packed);
    static BitPoly from_bits(const BitVec &bits);
    /// Little-endian hex: byte 0 holds x^0..x^7 with x^j at bit j of the byte.
    static BitPoly from_hex(std::string_view hex);
    /// Monomial sum such as "x^3+x+1", "x", "1" or "0".
    static BitPoly from_pretty(std::string_view text);
    /// Accepts either form; hex needs a "0x" prefix to disambiguate from "1".
    static BitPoly parse(std::string_view text);

    int degree() const;
    bool is_zero() const {
        return words_.empty();
    }
    bool coeff(size_t i) const {
        size_t k = i >> 6;
        return k < words_.size() && ((words_[k] >> (i & 63)) & 1);
    }
    size_t weight() const;
    /// Exponents of nonzero terms, ascending.
    std::vector<size_t> exponents() const;

    /// Coefficient vector of length n; requires degree() < n.
    BitVec to_bits(size_t n) const;
    std::string hex() const;
    std::string pretty() const;

    BitPoly &operator+=(const BitPoly &other);
    friend BitPoly operator+(BitPoly a, const BitPoly &b) {
        a += b;
        return a;
    }
    friend BitPoly operator*(const BitPoly &a, const BitPoly &b);
    /// Multiplication by x^amount.
    BitPoly shifted(size_t amount) const;
    bool operator==(const BitPoly &other) const = default;

    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    void normalize();
    void flip(size_t i);
    std::vector<uint64_t> words_;
};

BitPoly operator*(const BitPoly &a, const BitPoly &b);

struct DivMod {
    BitPoly quotient;
    BitPoly remainder;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b). Throws InvalidInput for b = 0.
DivMod poly_divmod(const BitPoly &a, const BitPoly &b);
BitPoly poly_mod(const BitPoly &a, const BitPoly &b);
bool poly_divides(const BitPoly &divisor, const BitPoly &a);
BitPoly poly_gcd(BitPoly a, BitPoly b);
/// x^deg(p) * p(1/x).
BitPoly reciprocal(const BitPoly &p);
/// x^n - 1 (= x^n + 1 over GF(2)).
BitPoly xn_minus_1(size_t n);

/// x^e mod f for -n < e < n, where f must divide x^n - 1. Negative exponents use x^n = 1 (mod f).
BitPoly x_pow_mod(int64_t e, const BitPoly &f, size_t n);

/// Orbits of i -> 2i mod n over {0, ..., n-1}, each listed from its smallest element by doubling.
/// Sorted by smallest element. Requires odd n.
std::vector<std::vector<size_t>> cyclotomic_cosets(size_t n);

/// Element of GF(2)[x]/(x^n - 1), stored as exactly n coefficients.
class RingElement {
   public:
    RingElement(size_t n, BitVec coeffs);
    /// Reduces p modulo x^n - 1.
    static RingElement from_poly(const BitPoly &p, size_t n);
    static RingElement zero(size_t n) {
        return RingElement(n, BitVec(n));
    }

    size_t n() const {
        return coeffs_.size();
    }
    const BitVec &coeffs() const {
        return coeffs_;
    }
    BitPoly to_poly() const {
        return BitPoly::from_bits(coeffs_);
    }

    /// Multiplication by x^k; k may be negative.
    RingElement times_x_pow(int64_t k) const;
    friend RingElement operator+(const RingElement &a, const RingElement &b);
    friend RingElement operator*(const RingElement &a, const RingElement &b);
    bool operator==(const RingElement &other) const = default;

   private:
    BitVec coeffs_;
};

RingElement operator+(const RingElement &a, const RingElement &b);
RingElement operator*(const RingElement &a, const RingElement &b);

}  // namespace qsync

#endif
