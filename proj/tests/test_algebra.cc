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
#include "qsync/bitvec.h"
#include "qsync/errors.h"
#include "qsync/gf2_matrix.h"
#include "qsync/gf2_poly.h"
#include "qsync/gf2m_field.h"
#include "qsync/rng.h"

using namespace qsync;

namespace {

uint64_t packed(const BitPoly &p) {
    REQUIRE(p.degree() < 64);
    return p.words().empty() ? 0 : p.words()[0];
}

}  // namespace

TEST_CASE("bitvec basics") {
    BitVec v(70);
    CHECK(v.none());
    v.set(0);
    v.set(69);
    v.flip(3);
    CHECK(v.popcount() == 3);
    CHECK(v.support() == std::vector<size_t>{0, 3, 69});
    CHECK(BitVec::from_string(v.str()) == v);
    CHECK(v.slice(2, 3).str() == "010");

    BitVec w = BitVec::from_indices(70, {3, 4});
    CHECK((v ^ w).support() == std::vector<size_t>{0, 4, 69});
    CHECK(v.dot(w) == true);
    CHECK(v.dot(BitVec::from_indices(70, {0, 3})) == false);
}

TEST_CASE("bitvec rotations are inverse and match multiplication by x") {
    BitVec v = BitVec::from_string("1100100");
    CHECK(v.rotated_right(1).str() == "0110010");
    CHECK(v.rotated_left(1).str() == "1001001");
    for (size_t k = 0; k < 14; k++) {
        CHECK(v.rotated_right(k).rotated_left(k) == v);
    }
    BitVec dst(10);
    dst.assign_range(3, BitVec::from_string("111"));
    CHECK(dst.str() == "0001110000");
}

TEST_CASE("bitpoly text forms") {
    BitPoly p = BitPoly::from_pretty("x^3+x+1");
    CHECK(p.hex() == "0b");
    CHECK(p.pretty() == "x^3+x+1");
    CHECK(BitPoly::from_hex("0b") == p);
    CHECK(BitPoly::parse("0x0b") == p);
    CHECK(BitPoly::parse("x^3+x+1") == p);
    CHECK(BitPoly::from_hex("0001") == BitPoly::monomial(8));
    CHECK(BitPoly::from_pretty("0").is_zero());
    CHECK(BitPoly().degree() == -1);
    CHECK(BitPoly::from_pretty("x^70+1").hex().size() == 18);
    CHECK_THROWS_AS(BitPoly::from_hex("0x1"), InvalidInput);
    CHECK_THROWS_AS(BitPoly::from_pretty("x^^2"), InvalidInput);
}

TEST_CASE("polynomial arithmetic agrees with the packed oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 300; trial++) {
        uint64_t a = rng.next() >> (rng.below(40) + 24);
        uint64_t b = (rng.next() >> (rng.below(40) + 28)) | 1;
        BitPoly pa = BitPoly::from_u64(a);
        BitPoly pb = BitPoly::from_u64(b);
        DivMod dm = poly_divmod(pa, pb);
        CHECK(packed(dm.quotient) == oracle::quot(a, b));
        CHECK(packed(dm.remainder) == oracle::mod(a, b));
        if (oracle::deg(a) + oracle::deg(b) < 64) {
            CHECK(packed(pa * pb) == oracle::mul(a, b));
        }
    }
    CHECK_THROWS_AS(poly_divmod(BitPoly::one(), BitPoly()), InvalidInput);
}

TEST_CASE("gcd, reciprocal, x^n - 1") {
    BitPoly f = BitPoly::from_pretty("x^3+x+1");
    BitPoly g = BitPoly::from_pretty("x^3+x^2+1");
    CHECK(reciprocal(f) == g);
    CHECK(poly_gcd(f * BitPoly::from_pretty("x+1"), g * BitPoly::from_pretty("x+1")) == BitPoly::from_pretty("x+1"));
    CHECK(xn_minus_1(7) == BitPoly::from_pretty("x^7+1"));
    CHECK(poly_divides(f, xn_minus_1(7)));
    CHECK(!poly_divides(f, xn_minus_1(5)));
}

TEST_CASE("x_pow_mod") {
    BitPoly f = BitPoly::from_pretty("x^3+x+1");
    CHECK(x_pow_mod(0, f, 7) == BitPoly::one());
    CHECK(x_pow_mod(1, f, 7) == BitPoly::monomial(1));
    // Frozen from oracle::x_pow_mod (x^6 mod f).
    CHECK(x_pow_mod(-1, f, 7) == BitPoly::from_pretty("x^2+1"));
    CHECK(oracle::x_pow_mod(-1, 0xb, 7) == 0x5);
    for (int64_t e = -6; e <= 6; e++) {
        CHECK(packed(x_pow_mod(e, f, 7)) == oracle::x_pow_mod(e, 0xb, 7));
    }
    BitPoly f31 = BitPoly::from_hex("c304");
    for (int64_t e = -30; e <= 30; e += 7) {
        CHECK(packed(x_pow_mod(e, f31, 31)) == oracle::x_pow_mod(e, 0x4c3, 31));
    }
    CHECK_THROWS_AS(x_pow_mod(1, BitPoly::from_pretty("x^2+1"), 7), InvalidInput);
    CHECK_THROWS_AS(x_pow_mod(7, f, 7), InvalidInput);
}

TEST_CASE("cyclotomic cosets") {
    auto cosets = cyclotomic_cosets(15);
    std::multiset<size_t> sizes;
    for (const auto &c : cosets) {
        sizes.insert(c.size());
    }
    CHECK(sizes == std::multiset<size_t>{1, 2, 4, 4, 4});
    CHECK(cosets[0] == std::vector<size_t>{0});
    CHECK(cyclotomic_cosets(1).size() == 1);
    CHECK_THROWS_AS(cyclotomic_cosets(8), InvalidInput);
}

TEST_CASE("factor_xn_minus_1") {
    auto f7 = factor_xn_minus_1(7);
    std::set<std::string> names;
    for (const auto &f : f7) {
        names.insert(f.pretty());
    }
    CHECK(names == std::set<std::string>{"x+1", "x^3+x+1", "x^3+x^2+1"});
    CHECK(factor_xn_minus_1(1).size() == 1);

    for (size_t n : {7, 9, 15, 21, 31, 45, 63}) {
        auto factors = factor_xn_minus_1(n);
        BitPoly product = BitPoly::one();
        std::multiset<size_t> degrees;
        for (const auto &f : factors) {
            CHECK(oracle::irreducible(packed(f)));
            product = product * f;
            degrees.insert(static_cast<size_t>(f.degree()));
        }
        CHECK(product == xn_minus_1(n));
        std::multiset<size_t> coset_sizes;
        for (const auto &c : cyclotomic_cosets(n)) {
            coset_sizes.insert(c.size());
        }
        CHECK(degrees == coset_sizes);
    }
    CHECK_THROWS_AS(factor_xn_minus_1(6), InvalidInput);
}

TEST_CASE("ring elements") {
    RingElement a = RingElement::from_poly(BitPoly::from_pretty("x^6+x"), 7);
    CHECK(a.times_x_pow(1).to_poly() == BitPoly::from_pretty("x^2+1"));
    CHECK(a.times_x_pow(-1).to_poly() == BitPoly::from_pretty("x^5+1"));
    CHECK(RingElement::from_poly(BitPoly::monomial(9), 7).to_poly() == BitPoly::monomial(2));
    RingElement b = RingElement::from_poly(BitPoly::from_pretty("x^3+x+1"), 7);
    RingElement h = RingElement::from_poly(BitPoly::from_pretty("x^4+x^2+x+1"), 7);
    CHECK((b * h) == RingElement::zero(7));
    CHECK((a + a) == RingElement::zero(7));
}

TEST_CASE("primitive polynomial table") {
    for (unsigned m = MIN_FIELD_DEGREE; m <= MAX_FIELD_DEGREE; m++) {
        uint64_t p = packed(primitive_polynomial(m));
        CHECK(oracle::deg(p) == static_cast<int>(m));
        CHECK(oracle::order_of_x(p, (uint64_t{1} << m) - 1) == (uint64_t{1} << m) - 1);
    }
    CHECK_THROWS_AS(primitive_polynomial(17), InvalidInput);
}

TEST_CASE("field arithmetic") {
    GF2mField field(5);
    oracle::Field ref(5, 0x25);
    for (uint32_t i = 0; i < 31; i++) {
        CHECK(field.alpha_pow(i) == ref.exp[i]);
        CHECK(field.log(ref.exp[i]) == i);
    }
    for (uint32_t a = 1; a < 32; a++) {
        CHECK(field.mul(a, field.inv(a)) == 1);
        for (uint32_t b = 0; b < 32; b += 5) {
            CHECK(field.mul(a, b) == ref.mul(a, b));
        }
    }
    CHECK(field.alpha_pow(-1) == field.inv(field.alpha_pow(1)));
    CHECK_THROWS_AS(field.log(0), InvalidInput);
}

TEST_CASE("minimal polynomials vanish on their conjugates") {
    GF2mField field(4);
    oracle::Field ref(4, 0x13);
    for (int64_t power = 0; power < 15; power++) {
        BitPoly mp = minimal_polynomial(field, power, 15);
        CHECK(oracle::irreducible(packed(mp)));
        uint32_t beta = ref.exp[power % 15];
        for (int k = 0; k < 4; k++) {
            CHECK(ref.eval(packed(mp), beta) == 0);
            beta = ref.mul(beta, beta);
        }
    }
    CHECK(multiplicative_order_of_two(7) == 3);
    CHECK(multiplicative_order_of_two(31) == 5);
    CHECK(multiplicative_order_of_two(23) == 11);
}

TEST_CASE("row echelon basis") {
    RowEchelonBasis basis(5);
    CHECK(basis.insert(BitVec::from_string("11000")));
    CHECK(basis.insert(BitVec::from_string("01100")));
    CHECK(!basis.insert(BitVec::from_string("10100")));
    CHECK(basis.rank() == 2);
    CHECK(basis.in_span(BitVec::from_string("10100")));
    CHECK(!basis.in_span(BitVec::from_string("00001")));
    CHECK(basis.reduce(BitVec::from_string("10100")).none());
    CHECK(gf2_rank({BitVec::from_string("111"), BitVec::from_string("111"), BitVec::from_string("001")}) == 2);
}

TEST_CASE("rng determinism") {
    Rng a = Rng::for_trial(5, 17);
    Rng b = Rng::for_trial(5, 17);
    Rng c = Rng::for_trial(5, 18);
    uint64_t first = a.next();
    CHECK(first == b.next());
    CHECK(first != c.next());
    Rng r(3);
    for (int i = 0; i < 1000; i++) {
        int64_t v = r.between(-4, 5);
        CHECK(v >= -4);
        CHECK(v <= 5);
        double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}
