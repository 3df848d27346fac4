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

#ifndef QSYNC_BITVEC_H
#define QSYNC_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsync {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit i lives in word i/64 at position i%64. Bits past size() are kept zero so
/// that word-level equality, hashing and popcount are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    static BitVec from_indices(size_t num_bits, std::initializer_list<size_t> indices);
    static BitVec from_indices(size_t num_bits, std::span<const size_t> indices);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVec from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value = true);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void clear();

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVec &other) const = default;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the bitwise AND.
    bool dot(const BitVec &other) const;

    /// Indices of set bits, ascending.
    std::vector<size_t> support() const;
    /// Copies bits [start, start + length).
    BitVec slice(size_t start, size_t length) const;
    /// Writes `src` into positions [start, start + src.size()).
    void assign_range(size_t start, const BitVec &src);
    /// result[i] = this[(i + amount) mod size()]. Rotating by k moves bit k to index 0.
    BitVec rotated_left(size_t amount) const;
    /// result[(i + amount) mod size()] = this[i]; the cyclic analogue of multiplying by x^amount.
    BitVec rotated_right(size_t amount) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> mutable_words() {
        return words_;
    }
    uint64_t hash() const;
    /// '0'/'1' characters, index 0 first.
    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        return static_cast<size_t>(v.hash());
    }
};

}  // namespace qsync

#endif
