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

#include "qsync/gf2m_field.h"

#include <array>

#include "qsync/errors.h"

using namespace qsync;

namespace {

// Index m. Conventional low-weight primitive trinomials/pentanomials.
constexpr std::array<uint64_t, MAX_FIELD_DEGREE + 1> PRIMITIVE_POLYS = {
    0,
    0,
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x89,     // x^7+x^3+1
    0x11D,    // x^8+x^4+x^3+x^2+1
    0x211,    // x^9+x^4+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1053,   // x^12+x^6+x^4+x+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4443,   // x^14+x^10+x^6+x+1
    0x8003,   // x^15+x+1
    0x1100B,  // x^16+x^12+x^3+x+1
};

}  // namespace

BitPoly qsync::primitive_polynomial(unsigned m) {
    if (m < MIN_FIELD_DEGREE || m > MAX_FIELD_DEGREE) {
        throw InvalidInput("no built-in primitive polynomial for m=" + std::to_string(m));
    }
    return BitPoly::from_u64(PRIMITIVE_POLYS[m]);
}

GF2mField::GF2mField(unsigned m)
    : m_(m), order_((uint32_t{1} << m) - 1), primitive_poly_(primitive_polynomial(m)), antilog_(order_), log_(order_ + 1, 0) {
    uint32_t reduce = static_cast<uint32_t>(PRIMITIVE_POLYS[m]);
    uint32_t v = 1;
    for (uint32_t e = 0; e < order_; e++) {
        if (e > 0 && v == 1) {
            throw InvalidInput("built-in polynomial for m=" + std::to_string(m) + " is not primitive");
        }
        antilog_[e] = v;
        log_[v] = e;
        v <<= 1;
        if (v >> m) {
            v ^= reduce;
        }
    }
    if (v != 1) {
        throw InvalidInput("built-in polynomial for m=" + std::to_string(m) + " is not primitive");
    }
}

GF2mField::Element GF2mField::alpha_pow(int64_t e) const {
    int64_t r = e % static_cast<int64_t>(order_);
    if (r < 0) {
        r += order_;
    }
    return antilog_[static_cast<size_t>(r)];
}

uint32_t GF2mField::log(Element v) const {
    if (v == 0 || v > order_) {
        throw InvalidInput("log of zero or out-of-field element");
    }
    return log_[v];
}

GF2mField::Element GF2mField::mul(Element a, Element b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    uint32_t e = log_[a] + log_[b];
    if (e >= order_) {
        e -= order_;
    }
    return antilog_[e];
}

GF2mField::Element GF2mField::inv(Element a) const {
    if (a == 0) {
        throw InvalidInput("inverse of zero in GF(2^m)");
    }
    return antilog_[(order_ - log_[a]) % order_];
}

GF2mField::Element GF2mField::eval(const BitPoly &p, Element at) const {
    // Horner from the top coefficient.
    Element acc = 0;
    for (int i = p.degree(); i >= 0; i--) {
        acc = mul(acc, at) ^ (p.coeff(static_cast<size_t>(i)) ? 1u : 0u);
    }
    return acc;
}

BitPoly qsync::minimal_polynomial(const GF2mField &field, int64_t power, uint32_t n) {
    if (n == 0 || field.order() % n != 0) {
        throw InvalidInput("n=" + std::to_string(n) + " does not divide 2^m-1=" + std::to_string(field.order()));
    }
    int64_t sn = n;
    uint64_t p = static_cast<uint64_t>(((power % sn) + sn) % sn);
    uint32_t step = field.order() / n;

    // prod (x - beta^j) over the coset of p, with coefficients in GF(2^m); index = degree.
    std::vector<GF2mField::Element> coeffs{1};
    uint64_t j = p;
    do {
        GF2mField::Element root = field.alpha_pow(static_cast<int64_t>(j * step));
        std::vector<GF2mField::Element> next(coeffs.size() + 1, 0);
        for (size_t i = 0; i < coeffs.size(); i++) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= field.mul(coeffs[i], root);
        }
        coeffs = std::move(next);
        j = (2 * j) % n;
    } while (j != p);

    BitPoly result;
    for (size_t i = 0; i < coeffs.size(); i++) {
        if (coeffs[i] > 1) {
            throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
        }
        if (coeffs[i]) {
            result += BitPoly::monomial(i);
        }
    }
    return result;
}

unsigned qsync::multiplicative_order_of_two(size_t n) {
    if (n == 0 || n % 2 == 0) {
        throw InvalidInput("multiplicative order of 2 needs odd n");
    }
    if (n == 1) {
        return 1;
    }
    unsigned m = 1;
    size_t v = 2 % n;
    while (v != 1) {
        v = (v * 2) % n;
        m++;
    }
    return m;
}

std::vector<BitPoly> qsync::factor_xn_minus_1(size_t n) {
    if (n == 0 || n % 2 == 0) {
        throw InvalidInput("factor_xn_minus_1 requires odd n (x^n-1 has repeated roots otherwise), got " + std::to_string(n));
    }
    if (n == 1) {
        return {BitPoly::from_exponents({0, 1})};
    }
    unsigned m = multiplicative_order_of_two(n);
    if (m < MIN_FIELD_DEGREE) {
        m = MIN_FIELD_DEGREE;
    }
    if (m > MAX_FIELD_DEGREE) {
        throw BudgetExceeded("splitting field of x^" + std::to_string(n) + "-1 has degree " + std::to_string(m) +
                                 " > " + std::to_string(MAX_FIELD_DEGREE),
                             static_cast<double>(m));
    }
    GF2mField field(m);
    std::vector<BitPoly> result;
    for (const auto &coset : cyclotomic_cosets(n)) {
        result.push_back(minimal_polynomial(field, static_cast<int64_t>(coset.front()), static_cast<uint32_t>(n)));
    }
    return result;
}
