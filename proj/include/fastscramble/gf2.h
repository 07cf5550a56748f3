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

#ifndef FASTSCRAMBLE_GF2_H
#define FASTSCRAMBLE_GF2_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fastscramble {

/// Dense matrix over GF(2).
///
/// Rows are stored contiguously as 64-bit blocks, least significant bit first
/// (column c of a row lives in block c / 64 at bit c % 64). Padding bits past
/// the last column of every row are always zero, so rows can be compared and
/// XORed block-wise without masking.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Parses rows such as {"101", "011"}. All rows must have equal length and
    /// contain only '0' and '1'.
    static BitMatrix from_strings(std::span<const std::string_view> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t blocks_per_row() const { return stride_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(size_t row, size_t col) const {
        return (data_[row * stride_ + (col >> 6)] >> (col & 63)) & 1;
    }
    void set(size_t row, size_t col, bool value) {
        uint64_t &block = data_[row * stride_ + (col >> 6)];
        uint64_t bit = uint64_t{1} << (col & 63);
        block = value ? (block | bit) : (block & ~bit);
    }
    void flip(size_t row, size_t col) {
        data_[row * stride_ + (col >> 6)] ^= uint64_t{1} << (col & 63);
    }

    std::span<uint64_t> row(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row(size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> data() const { return data_; }
    std::span<uint64_t> data() { return data_; }

    /// row[dst] ^= row[src]
    void xor_row_into(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    size_t row_popcount(size_t r) const;

    BitMatrix transposed() const;

    bool operator==(const BitMatrix &other) const = default;

    /// One line per row of '0'/'1' characters.
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Rank over GF(2). The argument is copied; see rank_gf2_inplace.
size_t rank_gf2(const BitMatrix &m);

/// Rank over GF(2), reducing `m` to row echelon form as a side effect.
/// Pivot columns are scanned left to right and the topmost unused row with a
/// one in the pivot column is chosen.
size_t rank_gf2_inplace(BitMatrix &m);

/// Copies the listed columns, in ascending index order, into a new matrix.
/// Throws std::out_of_range if any index is >= m.cols().
BitMatrix select_columns(const BitMatrix &m, std::span<const size_t> cols);

/// Copies the listed rows, in the order given, into a new matrix.
BitMatrix select_rows(const BitMatrix &m, std::span<const size_t> rows);

/// Uniformly random matrix; every bit is an independent fair coin.
BitMatrix random_bitmatrix(size_t rows, size_t cols, std::mt19937_64 &rng);

}  // namespace fastscramble

#endif
