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

#ifndef QSYNC_GF2_MATRIX_H
#define QSYNC_GF2_MATRIX_H

#include <vector>

#include "qsync/bitvec.h"

namespace qsync {

/// Row basis kept in reduced row echelon form; each row owns a distinct pivot column.
class RowEchelonBasis {
   public:
    explicit RowEchelonBasis(size_t num_cols) : num_cols_(num_cols) {
    }

    /// Clears every pivot column of `v` that this basis owns.
    BitVec reduce(BitVec v) const;
    /// Adds `v` if independent, keeping full reduction. Returns whether the rank grew.
    bool insert(const BitVec &v);
    bool in_span(const BitVec &v) const {
        return reduce(v).none();
    }

    size_t rank() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    /// Rows ordered by pivot column.
    std::vector<BitVec> sorted_rows() const;

   private:
    size_t num_cols_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
};

size_t gf2_rank(const std::vector<BitVec> &rows);

}  // namespace qsync

#endif
