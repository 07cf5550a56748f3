// Copyright 2026 The fastscramble Authors
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

#include "fastscramble/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fastscramble {

namespace {

size_t blocks_for(size_t cols) {
    return (cols + 63) / 64;
}

}  // namespace

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(blocks_for(cols)), data_(rows * blocks_for(cols), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("BitMatrix::from_strings: expected '0' or '1'");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void BitMatrix::xor_row_into(size_t dst, size_t src) {
    uint64_t *d = data_.data() + dst * stride_;
    const uint64_t *s = data_.data() + src * stride_;
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

size_t BitMatrix::row_popcount(size_t r) const {
    size_t total = 0;
    for (uint64_t block : row(r)) {
        total += std::popcount(block);
    }
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

size_t rank_gf2(const BitMatrix &m) {
    BitMatrix copy = m;
    return rank_gf2_inplace(copy);
}

size_t rank_gf2_inplace(BitMatrix &m) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    const size_t stride = m.blocks_per_row();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    uint64_t *base = m.data().data();

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; col++) {
        const size_t block = col >> 6;
        const uint64_t bit = uint64_t{1} << (col & 63);

        size_t pivot = rank;
        while (pivot < rows && !(base[pivot * stride + block] & bit)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        m.swap_rows(pivot, rank);

        const uint64_t *p = base + rank * stride;
        for (size_t r = rank + 1; r < rows; r++) {
            uint64_t *q = base + r * stride;
            if (q[block] & bit) {
                for (size_t k = block; k < stride; k++) {
                    q[k] ^= p[k];
                }
            }
        }
        rank++;
    }
    return rank;
}

BitMatrix select_columns(const BitMatrix &m, std::span<const size_t> cols) {
    std::vector<size_t> sorted(cols.begin(), cols.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t c : sorted) {
        if (c >= m.cols()) {
            throw std::out_of_range("select_columns: column index out of range");
        }
    }
    BitMatrix out(m.rows(), sorted.size());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t k = 0; k < sorted.size(); k++) {
            if (m.get(r, sorted[k])) {
                out.set(r, k, true);
            }
        }
    }
    return out;
}

BitMatrix select_rows(const BitMatrix &m, std::span<const size_t> rows) {
    BitMatrix out(rows.size(), m.cols());
    for (size_t k = 0; k < rows.size(); k++) {
        if (rows[k] >= m.rows()) {
            throw std::out_of_range("select_rows: row index out of range");
        }
        auto src = m.row(rows[k]);
        std::copy(src.begin(), src.end(), out.row(k).begin());
    }
    return out;
}

BitMatrix random_bitmatrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
    BitMatrix m(rows, cols);
    const size_t tail = cols & 63;
    const uint64_t tail_mask = tail == 0 ? ~uint64_t{0} : (uint64_t{1} << tail) - 1;
    for (size_t r = 0; r < rows; r++) {
        auto row = m.row(r);
        for (size_t k = 0; k < row.size(); k++) {
            row[k] = rng();
        }
        if (!row.empty()) {
            row.back() &= tail_mask;
        }
    }
    return m;
}

}  // namespace fastscramble
