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

#include "qsync/bitvec.h"

#include <bit>

#include "qsync/errors.h"

using namespace qsync;

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVec BitVec::from_indices(size_t num_bits, std::initializer_list<size_t> indices) {
    return from_indices(num_bits, std::span<const size_t>(indices.begin(), indices.size()));
}

BitVec BitVec::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVec result(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw InvalidInput("bit index " + std::to_string(i) + " out of range for length " + std::to_string(num_bits));
        }
        result.flip(i);
    }
    return result;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i);
        } else if (bits[i] != '0') {
            throw InvalidInput("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVec::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw InvalidInput("BitVec length mismatch in xor");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw InvalidInput("BitVec length mismatch in dot product");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<size_t> BitVec::support() const {
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

BitVec BitVec::slice(size_t start, size_t length) const {
    if (start + length > num_bits_) {
        throw InvalidInput("BitVec slice out of range");
    }
    BitVec result(length);
    for (size_t i = 0; i < length; i++) {
        if (get(start + i)) {
            result.set(i);
        }
    }
    return result;
}

void BitVec::assign_range(size_t start, const BitVec &src) {
    if (start + src.size() > num_bits_) {
        throw InvalidInput("BitVec assign_range out of range");
    }
    for (size_t i = 0; i < src.size(); i++) {
        set(start + i, src.get(i));
    }
}

BitVec BitVec::rotated_left(size_t amount) const {
    BitVec result(num_bits_);
    if (num_bits_ == 0) {
        return result;
    }
    amount %= num_bits_;
    for (size_t i = 0; i < num_bits_; i++) {
        size_t src = i + amount;
        if (src >= num_bits_) {
            src -= num_bits_;
        }
        if (get(src)) {
            result.set(i);
        }
    }
    return result;
}

BitVec BitVec::rotated_right(size_t amount) const {
    if (num_bits_ == 0) {
        return *this;
    }
    amount %= num_bits_;
    return rotated_left(num_bits_ - amount);
}

uint64_t BitVec::hash() const {
    // FNV-1a over the words, then the length.
    uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
        h ^= w;
        h *= 0x100000001b3ULL;
    }
    h ^= num_bits_;
    h *= 0x100000001b3ULL;
    return h;
}

std::string BitVec::str() const {
    std::string result(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            result[i] = '1';
        }
    }
    return result;
}
