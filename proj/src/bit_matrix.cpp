/* Copyright 2026 The ddm-match Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ddm/bit_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

namespace ddm {

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(summary_.begin(), summary_.end(), [](Word w) { return w != 0; });
}

IntersectionMatrix::IntersectionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(rows)) {
  const std::size_t n = total_words();
  if (n == 0) return;
  if (n > SIZE_MAX / sizeof(Word)) throw std::bad_alloc();
  data_.reset(static_cast<Word*>(std::calloc(n, sizeof(Word))));
  if (!data_) throw std::bad_alloc();
}

IntersectionMatrix::IntersectionMatrix(const IntersectionMatrix& other)
    : IntersectionMatrix(other.rows_, other.cols_) {
  if (total_words() != 0) std::memcpy(data_.get(), other.data_.get(), total_words() * sizeof(Word));
}

IntersectionMatrix& IntersectionMatrix::operator=(const IntersectionMatrix& other) {
  if (this != &other) {
    IntersectionMatrix copy(other);
    *this = std::move(copy);
  }
  return *this;
}

IntersectionMatrix::IntersectionMatrix(IntersectionMatrix&& other) noexcept
    : rows_(std::exchange(other.rows_, 0)),
      cols_(std::exchange(other.cols_, 0)),
      stride_(std::exchange(other.stride_, 0)),
      data_(std::move(other.data_)) {}

IntersectionMatrix& IntersectionMatrix::operator=(IntersectionMatrix&& other) noexcept {
  rows_ = std::exchange(other.rows_, 0);
  cols_ = std::exchange(other.cols_, 0);
  stride_ = std::exchange(other.stride_, 0);
  data_ = std::move(other.data_);
  return *this;
}

void IntersectionMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

void IntersectionMatrix::set(std::size_t i, std::size_t j) {
  check_index(i, j);
  set_unchecked(i, j);
}

bool IntersectionMatrix::get(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return get_unchecked(i, j);
}

std::span<Word> IntersectionMatrix::column(std::size_t j) {
  if (j < 1 || j > cols_) throw std::out_of_range("column " + std::to_string(j) + " out of range");
  return {column_ptr(j), stride_};
}

std::span<const Word> IntersectionMatrix::column(std::size_t j) const {
  if (j < 1 || j > cols_) throw std::out_of_range("column " + std::to_string(j) + " out of range");
  return {column_ptr(j), stride_};
}

void IntersectionMatrix::or_column(std::size_t j, const BitVector& row_bits) {
  if (row_bits.size() != rows_) {
    throw std::invalid_argument("or_column: vector has " + std::to_string(row_bits.size()) +
                                " bits, matrix has " + std::to_string(rows_) + " rows");
  }
  // Only nonzero words are stored, so columns that never gain a bit keep
  // their pages untouched.
  Word* col = column(j).data();
  row_bits.for_each_nonzero_word([col](std::size_t w, Word bits) { col[w] |= bits; });
}

void IntersectionMatrix::or_row(std::size_t i, const BitVector& col_bits) {
  if (col_bits.size() != cols_) {
    throw std::invalid_argument("or_row: vector has " + std::to_string(col_bits.size()) +
                                " bits, matrix has " + std::to_string(cols_) + " columns");
  }
  if (i < 1 || i > rows_) throw std::out_of_range("row " + std::to_string(i) + " out of range");
  col_bits.for_each_set([&](std::size_t pos) { set_unchecked(i, pos + 1); });
}

void IntersectionMatrix::clear_column(std::size_t j) {
  auto col = column(j);
  std::fill(col.begin(), col.end(), Word{0});
}

void IntersectionMatrix::clear_row(std::size_t i) {
  if (i < 1 || i > rows_) throw std::out_of_range("row " + std::to_string(i) + " out of range");
  const std::size_t w = (i - 1) / kWordBits;
  const Word mask = ~(Word{1} << ((i - 1) % kWordBits));
  for (std::size_t j = 1; j <= cols_; ++j) column_ptr(j)[w] &= mask;
}

IntersectionMatrix& IntersectionMatrix::operator&=(const IntersectionMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix AND: shape " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " vs " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
  const std::size_t n = total_words();
  for (std::size_t w = 0; w < n; ++w) data_[w] &= other.data_[w];
  return *this;
}

IntersectionMatrix operator&(IntersectionMatrix a, const IntersectionMatrix& b) {
  a &= b;
  return a;
}

std::size_t IntersectionMatrix::popcount() const noexcept {
  std::size_t total = 0;
  const std::size_t n = total_words();
  for (std::size_t w = 0; w < n; ++w) total += static_cast<std::size_t>(std::popcount(data_[w]));
  return total;
}

std::size_t IntersectionMatrix::column_popcount(std::size_t j) const {
  std::size_t total = 0;
  for (Word w : column(j)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

IntersectionMatrix IntersectionMatrix::transposed() const {
  IntersectionMatrix t(cols_, rows_);
  for (std::size_t j = 1; j <= cols_; ++j) {
    const Word* col = column_ptr(j);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = col[w];
      while (bits != 0) {
        const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)) + 1;
        t.set_unchecked(j, i);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> IntersectionMatrix::set_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j <= cols_; ++j) {
    const Word* col = column_ptr(j);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = col[w];
      while (bits != 0) {
        pairs.emplace_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)) + 1, j);
        bits &= bits - 1;
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) noexcept {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  const std::size_t n = a.total_words();
  return n == 0 || std::memcmp(a.data_.get(), b.data_.get(), n * sizeof(Word)) == 0;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const IntersectionMatrix& a,
                                                                   const IntersectionMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("first_difference: shape mismatch");
  }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    auto ca = a.column(j);
    auto cb = b.column(j);
    for (std::size_t w = 0; w < ca.size(); ++w) {
      const Word diff = ca[w] ^ cb[w];
      if (diff == 0) continue;
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(diff)) + 1;
      if (!best || i < best->first) best.emplace(i, j);
      break;
    }
  }
  return best;
}

}  // namespace ddm
