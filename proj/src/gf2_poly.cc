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

#include "qsync/gf2_poly.h"

#include <algorithm>
#include <bit>
#include <cctype>

#include "qsync/errors.h"

using namespace qsync;

namespace {

// dst ^= src * x^shift, growing dst as needed.
void xor_shifted(std::vector<uint64_t> &dst, std::span<const uint64_t> src, size_t shift) {
    if (src.empty()) {
        return;
    }
    size_t word_shift = shift >> 6;
    size_t bit_shift = shift & 63;
    size_t needed = src.size() + word_shift + 1;
    if (dst.size() < needed) {
        dst.resize(needed, 0);
    }
    for (size_t k = 0; k < src.size(); k++) {
        dst[k + word_shift] ^= src[k] << bit_shift;
        if (bit_shift) {
            dst[k + word_shift + 1] ^= src[k] >> (64 - bit_shift);
        }
    }
}

int degree_of(std::span<const uint64_t> words) {
    for (size_t k = words.size(); k-- > 0;) {
        if (words[k]) {
            return static_cast<int>(k * 64 + 63 - std::countl_zero(words[k]));
        }
    }
    return -1;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    return -1;
}

}  // namespace

void BitPoly::normalize() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

void BitPoly::flip(size_t i) {
    size_t k = i >> 6;
    if (words_.size() <= k) {
        words_.resize(k + 1, 0);
    }
    words_[k] ^= uint64_t{1} << (i & 63);
    normalize();
}

BitPoly BitPoly::monomial(size_t exponent) {
    BitPoly p;
    p.flip(exponent);
    return p;
}

BitPoly BitPoly::from_exponents(std::initializer_list<size_t> exponents) {
    BitPoly p;
    for (size_t e : exponents) {
        p.flip(e);
    }
    return p;
}

BitPoly BitPoly::from_u64(uint64_t packed) {
    BitPoly p;
    p.words_.push_back(packed);
    p.normalize();
    return p;
}

BitPoly BitPoly::from_bits(const BitVec &bits) {
    BitPoly p;
    p.words_.assign(bits.words().begin(), bits.words().end());
    p.normalize();
    return p;
}

BitPoly BitPoly::from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    if (hex.empty() || hex.size() % 2 != 0) {
        throw InvalidInput("polynomial hex must be a nonempty sequence of byte pairs: '" + std::string(hex) + "'");
    }
    BitPoly p;
    p.words_.assign((hex.size() / 2 + 7) / 8, 0);
    for (size_t b = 0; b < hex.size() / 2; b++) {
        int hi = hex_digit(hex[2 * b]);
        int lo = hex_digit(hex[2 * b + 1]);
        if (hi < 0 || lo < 0) {
            throw InvalidInput("invalid hex digit in polynomial '" + std::string(hex) + "'");
        }
        uint64_t byte = static_cast<uint64_t>(hi * 16 + lo);
        p.words_[b / 8] |= byte << (8 * (b % 8));
    }
    p.normalize();
    return p;
}

BitPoly BitPoly::from_pretty(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw InvalidInput("empty polynomial text");
    }
    if (s == "0") {
        return BitPoly();
    }
    BitPoly p;
    size_t pos = 0;
    while (true) {
        size_t end = s.find('+', pos);
        std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        size_t exponent;
        if (term == "1") {
            exponent = 0;
        } else if (term == "x") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^' &&
                   std::all_of(term.begin() + 2, term.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            exponent = std::stoull(term.substr(2));
        } else {
            throw InvalidInput("cannot parse polynomial term '" + term + "' in '" + std::string(text) + "'");
        }
        p.flip(exponent);
        if (end == std::string::npos) {
            break;
        }
        pos = end + 1;
    }
    return p;
}

BitPoly BitPoly::parse(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) {
        return from_hex(text);
    }
    return from_pretty(text);
}

int BitPoly::degree() const {
    return degree_of(words_);
}

size_t BitPoly::weight() const {
    size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::vector<size_t> BitPoly::exponents() const {
    std::vector<size_t> result;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            result.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

BitVec BitPoly::to_bits(size_t n) const {
    if (degree() >= static_cast<int>(n)) {
        throw InvalidInput("polynomial of degree " + std::to_string(degree()) + " does not fit in " + std::to_string(n) + " coefficients");
    }
    BitVec result(n);
    auto dst = result.mutable_words();
    for (size_t k = 0; k < words_.size(); k++) {
        dst[k] = words_[k];
    }
    return result;
}

std::string BitPoly::hex() const {
    static const char *digits = "0123456789abcdef";
    int deg = degree();
    size_t num_bytes = deg < 0 ? 1 : static_cast<size_t>(deg) / 8 + 1;
    std::string result;
    for (size_t b = 0; b < num_bytes; b++) {
        uint64_t byte = (words_.empty() ? 0 : (words_[b / 8] >> (8 * (b % 8)))) & 0xff;
        result.push_back(digits[byte >> 4]);
        result.push_back(digits[byte & 15]);
    }
    return result;
}

std::string BitPoly::pretty() const {
    if (is_zero()) {
        return "0";
    }
    auto exps = exponents();
    std::string result;
    for (size_t k = exps.size(); k-- > 0;) {
        if (!result.empty()) {
            result += "+";
        }
        if (exps[k] == 0) {
            result += "1";
        } else if (exps[k] == 1) {
            result += "x";
        } else {
            result += "x^" + std::to_string(exps[k]);
        }
    }
    return result;
}

BitPoly &BitPoly::operator+=(const BitPoly &other) {
    if (words_.size() < other.words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (size_t k = 0; k < other.words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    normalize();
    return *this;
}

BitPoly qsync::operator*(const BitPoly &a, const BitPoly &b) {
    const BitPoly &small = a.weight() <= b.weight() ? a : b;
    const BitPoly &large = a.weight() <= b.weight() ? b : a;
    BitPoly result;
    for (size_t e : small.exponents()) {
        xor_shifted(result.words_, large.words_, e);
    }
    result.normalize();
    return result;
}

BitPoly BitPoly::shifted(size_t amount) const {
    BitPoly result;
    xor_shifted(result.words_, words_, amount);
    result.normalize();
    return result;
}

DivMod qsync::poly_divmod(const BitPoly &a, const BitPoly &b) {
    int db = b.degree();
    if (db < 0) {
        throw InvalidInput("polynomial division by zero");
    }
    std::vector<uint64_t> rem(a.words().begin(), a.words().end());
    std::vector<uint64_t> quot;
    int dr = degree_of(rem);
    while (dr >= db) {
        size_t shift = static_cast<size_t>(dr - db);
        xor_shifted(rem, b.words(), shift);
        if (quot.size() <= (shift >> 6)) {
            quot.resize((shift >> 6) + 1, 0);
        }
        quot[shift >> 6] ^= uint64_t{1} << (shift & 63);
        dr = degree_of(rem);
    }
    DivMod result;
    for (size_t k = 0; k < quot.size(); k++) {
        result.quotient += BitPoly::from_u64(quot[k]).shifted(64 * k);
    }
    for (size_t k = 0; k < rem.size(); k++) {
        if (rem[k]) {
            result.remainder += BitPoly::from_u64(rem[k]).shifted(64 * k);
        }
    }
    return result;
}

BitPoly qsync::poly_mod(const BitPoly &a, const BitPoly &b) {
    return poly_divmod(a, b).remainder;
}

bool qsync::poly_divides(const BitPoly &divisor, const BitPoly &a) {
    return poly_mod(a, divisor).is_zero();
}

BitPoly qsync::poly_gcd(BitPoly a, BitPoly b) {
    while (!b.is_zero()) {
        BitPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitPoly qsync::reciprocal(const BitPoly &p) {
    BitPoly result;
    int d = p.degree();
    for (size_t e : p.exponents()) {
        result += BitPoly::monomial(static_cast<size_t>(d) - e);
    }
    return result;
}

BitPoly qsync::xn_minus_1(size_t n) {
    return BitPoly::from_exponents({0, n});
}

BitPoly qsync::x_pow_mod(int64_t e, const BitPoly &f, size_t n) {
    if (n == 0) {
        throw InvalidInput("x_pow_mod: n must be positive");
    }
    if (f.is_zero() || !poly_divides(f, xn_minus_1(n))) {
        throw InvalidInput("x_pow_mod: " + f.pretty() + " does not divide x^" + std::to_string(n) + "-1");
    }
    int64_t sn = static_cast<int64_t>(n);
    if (e <= -sn || e >= sn) {
        throw InvalidInput("x_pow_mod: exponent " + std::to_string(e) + " outside (-n, n)");
    }
    size_t exponent = static_cast<size_t>(e < 0 ? e + sn : e);
    // Step x one power at a time; remainders never exceed deg f.
    BitPoly acc = poly_mod(BitPoly::one(), f);
    int df = f.degree();
    for (size_t i = 0; i < exponent; i++) {
        acc = acc.shifted(1);
        if (acc.degree() == df) {
            acc += f;
        }
    }
    return acc;
}

std::vector<std::vector<size_t>> qsync::cyclotomic_cosets(size_t n) {
    if (n == 0 || n % 2 == 0) {
        throw InvalidInput("cyclotomic cosets require odd n, got " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<size_t>> result;
    for (size_t start = 0; start < n; start++) {
        if (seen[start]) {
            continue;
        }
        std::vector<size_t> coset;
        size_t j = start;
        do {
            seen[j] = true;
            coset.push_back(j);
            j = (2 * j) % n;
        } while (j != start);
        result.push_back(std::move(coset));
    }
    return result;
}

RingElement::RingElement(size_t n, BitVec coeffs) : coeffs_(std::move(coeffs)) {
    if (n == 0 || coeffs_.size() != n) {
        throw InvalidInput("RingElement needs exactly n > 0 coefficients");
    }
}

RingElement RingElement::from_poly(const BitPoly &p, size_t n) {
    BitVec coeffs(n);
    for (size_t e : p.exponents()) {
        coeffs.flip(e % n);
    }
    return RingElement(n, std::move(coeffs));
}

RingElement RingElement::times_x_pow(int64_t k) const {
    int64_t sn = static_cast<int64_t>(n());
    int64_t r = ((k % sn) + sn) % sn;
    return RingElement(n(), coeffs_.rotated_right(static_cast<size_t>(r)));
}

RingElement qsync::operator+(const RingElement &a, const RingElement &b) {
    if (a.n() != b.n()) {
        throw InvalidInput("ring modulus mismatch");
    }
    return RingElement(a.n(), a.coeffs_ ^ b.coeffs_);
}

RingElement qsync::operator*(const RingElement &a, const RingElement &b) {
    if (a.n() != b.n()) {
        throw InvalidInput("ring modulus mismatch");
    }
    BitVec acc(a.n());
    for (size_t e : a.coeffs_.support()) {
        acc ^= b.coeffs_.rotated_right(e);
    }
    return RingElement(a.n(), std::move(acc));
}
