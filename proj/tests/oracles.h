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

// Independent reference computations for the unit and acceptance tests. Everything here works
// on polynomials packed into uint64_t (degree < 64) and shares no code with the library.

#ifndef QSYNC_TESTS_ORACLES_H
#define QSYNC_TESTS_ORACLES_H

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline int deg(uint64_t p) {
    return p ? 63 - std::countl_zero(p) : -1;
}

inline uint64_t mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    for (; b; b >>= 1, a <<= 1) {
        if (b & 1) {
            r ^= a;
        }
    }
    return r;
}

inline uint64_t mod(uint64_t a, uint64_t m) {
    while (deg(a) >= deg(m)) {
        a ^= m << (deg(a) - deg(m));
    }
    return a;
}

inline uint64_t quot(uint64_t a, uint64_t m) {
    uint64_t q = 0;
    while (deg(a) >= deg(m)) {
        int s = deg(a) - deg(m);
        q |= uint64_t{1} << s;
        a ^= m << s;
    }
    return q;
}

inline uint64_t xn1(unsigned n) {
    return (uint64_t{1} << n) | 1;
}

/// x^e mod f for f | x^n - 1, by stepping x one degree at a time from x^(e mod n).
inline uint64_t x_pow_mod(int64_t e, uint64_t f, unsigned n) {
    int64_t steps = ((e % static_cast<int64_t>(n)) + n) % n;
    uint64_t r = mod(1, f);
    for (int64_t i = 0; i < steps; i++) {
        r = mod(r << 1, f);
    }
    return r;
}

inline bool irreducible(uint64_t p) {
    for (uint64_t d = 2; deg(d) <= deg(p) / 2; d++) {
        if (mod(p, d) == 0) {
            return false;
        }
    }
    return deg(p) >= 1;
}

/// Order of x modulo p (p with nonzero constant term); 0 when it exceeds limit.
inline uint64_t order_of_x(uint64_t p, uint64_t limit) {
    uint64_t r = mod(2, p);
    for (uint64_t k = 1; k <= limit; k++) {
        if (r == 1) {
            return k;
        }
        r = mod(r << 1, p);
    }
    return 0;
}

/// Minimum weight of a nonzero multiple of g below x^n, enumerating all 2^k messages in Gray order.
inline unsigned min_distance(uint64_t g, unsigned n) {
    unsigned k = n - deg(g);
    unsigned best = n;
    uint64_t c = 0;
    for (uint64_t i = 1; i < (uint64_t{1} << k); i++) {
        c ^= g << std::countr_zero(i);
        best = std::min<unsigned>(best, std::popcount(c));
    }
    return best;
}

/// Cyclic rotation of an n-bit word: result bit i = word bit (i + s) mod n.
inline uint64_t rotate_down(uint64_t w, unsigned s, unsigned n) {
    uint64_t mask = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    s %= n;
    return s ? ((w >> s) | (w << (n - s))) & mask : w;
}

/// Exponent table of GF(2^m) generated by x modulo a primitive polynomial.
struct Field {
    unsigned m;
    uint64_t prim;
    std::vector<uint32_t> exp;
    Field(unsigned m, uint64_t prim) : m(m), prim(prim) {
        uint32_t order = (1u << m) - 1;
        uint32_t v = 1;
        for (uint32_t i = 0; i < order; i++) {
            exp.push_back(v);
            v <<= 1;
            if (v >> m) {
                v ^= static_cast<uint32_t>(prim);
            }
        }
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        uint32_t r = 0;
        for (unsigned i = 0; i < m; i++) {
            if (b >> i & 1) {
                r ^= a;
            }
            a <<= 1;
            if (a >> m) {
                a ^= static_cast<uint32_t>(prim);
            }
        }
        return r;
    }
    uint32_t eval(uint64_t p, uint32_t at) const {
        uint32_t r = 0;
        for (int i = deg(p); i >= 0; i--) {
            r = mul(r, at) ^ static_cast<uint32_t>(p >> i & 1);
        }
        return r;
    }
};

inline std::string pretty(uint64_t p) {
    std::string out;
    for (int i = deg(p); i >= 0; i--) {
        if (p >> i & 1) {
            if (!out.empty()) {
                out += "+";
            }
            out += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace oracle

#endif
