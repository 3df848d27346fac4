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

#include "qsync/gf2_matrix.h"

#include <algorithm>
#include <numeric>

#include "qsync/errors.h"

using namespace qsync;

BitVec RowEchelonBasis::reduce(BitVec v) const {
    if (v.size() != num_cols_) {
        throw InvalidInput("row length mismatch in echelon reduction");
    }
    for (size_t r = 0; r < rows_.size(); r++) {
        if (v.get(pivots_[r])) {
            v ^= rows_[r];
        }
    }
    return v;
}

bool RowEchelonBasis::insert(const BitVec &v) {
    BitVec reduced = reduce(v);
    auto sup = reduced.support();
    if (sup.empty()) {
        return false;
    }
    size_t pivot = sup.front();
    for (auto &row : rows_) {
        if (row.get(pivot)) {
            row ^= reduced;
        }
    }
    rows_.push_back(std::move(reduced));
    pivots_.push_back(pivot);
    return true;
}

std::vector<BitVec> RowEchelonBasis::sorted_rows() const {
    std::vector<size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<BitVec> result;
    for (size_t k : order) {
        result.push_back(rows_[k]);
    }
    return result;
}

size_t qsync::gf2_rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    RowEchelonBasis basis(rows.front().size());
    for (const auto &r : rows) {
        basis.insert(r);
    }
    return basis.rank();
}
