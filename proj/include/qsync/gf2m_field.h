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

#ifndef QSYNC_GF2M_FIELD_H
#define QSYNC_GF2M_FIELD_H

#include <cstdint>
#include <vector>

#include "qsync/gf2_poly.h"

namespace qsync {

constexpr unsigned MIN_FIELD_DEGREE = 2;
constexpr unsigned MAX_FIELD_DEGREE = 16;

/// Built-in primitive polynomial for GF(2^m), 2 <= m <= 16. One fixed choice per m.
BitPoly primitive_polynomial(unsigned m);

/// GF(2^m) with elements packed as integers (bit j = coefficient of alpha^j),
/// where alpha is the class of x modulo the primitive polynomial.
class GF2mField {
   public:
    using Element = uint32_t;

    explicit GF2mField(unsigned m);

    unsigned m() const {
        return m_;
    }
    /// 2^m - 1, the multiplicative group order.
    uint32_t order() const {
        return order_;
    }
    const BitPoly &primitive_poly() const {
        return primitive_poly_;
    }

    Element alpha_pow(int64_t e) const;
    /// Discrete log base alpha; throws InvalidInput for 0.
    uint32_t log(Element v) const;
    Element add(Element a, Element b) const {
        return a ^ b;
    }
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    /// Evaluates a GF(2) polynomial at a field element.
    Element eval(const BitPoly &p, Element at) const;

   private:
    unsigned m_;
    uint32_t order_;
    BitPoly primitive_poly_;
    std::vector<Element> antilog_;
    std::vector<uint32_t> log_;
};

/// Minimal polynomial over GF(2) of beta^power where beta = alpha^((2^m - 1) / n) is a primitive
/// n-th root of unity. With n = 2^m - 1 this is the minimal polynomial of alpha^power.
BitPoly minimal_polynomial(const GF2mField &field, int64_t power, uint32_t n);

/// Multiplicative order of 2 modulo odd n (the smallest m with n | 2^m - 1).
unsigned multiplicative_order_of_two(size_t n);

/// Irreducible factors of x^n - 1 for odd n, one per cyclotomic coset, in coset order.
/// Requires the splitting field degree to be at most MAX_FIELD_DEGREE.
std::vector<BitPoly> factor_xn_minus_1(size_t n);

}  // namespace qsync

#endif
