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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ddm {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

// Fixed-length bit vector. Bit positions are 0-based here; the matrix API
// below uses the 1-based extent ids. A second level keeps one bit per word
// (set iff the word is nonzero) so sparse vectors are walked without
// scanning every word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_(words_for(size), 0), summary_(words_for(words_for(size)), 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t pos) noexcept {
    const std::size_t w = pos / kWordBits;
    words_[w] |= Word{1} << (pos % kWordBits);
    summary_[w / kWordBits] |= Word{1} << (w % kWordBits);
  }
  void reset(std::size_t pos) noexcept {
    const std::size_t w = pos / kWordBits;
    words_[w] &= ~(Word{1} << (pos % kWordBits));
    if (words_[w] == 0) summary_[w / kWordBits] &= ~(Word{1} << (w % kWordBits));
  }
  bool test(std::size_t pos) const noexcept { return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U; }

  std::size_t count() const noexcept;
  bool any() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  // Calls fn(w, words()[w]) for every nonzero word in increasing order.
  template <class Fn>
  void for_each_nonzero_word(Fn&& fn) const {
    for (std::size_t s = 0; s < summary_.size(); ++s) {
      for (Word live = summary_[s]; live != 0; live &= live - 1) {
        const std::size_t w = s * kWordBits + static_cast<std::size_t>(std::countr_zero(live));
        fn(w, words_[w]);
      }
    }
  }

  // Calls fn(pos) for every set bit in increasing order.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for_each_nonzero_word([&fn](std::size_t w, Word bits) {
      for (; bits != 0; bits &= bits - 1) fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    });
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
  std::vector<Word> summary_;
};

// Dense n x m bit matrix M with M(i,j) = 1 iff subscription i meets update j.
//
// Storage is column-major: column j owns words_per_column() contiguous words,
// so writers restricted to disjoint column sets never touch a shared word.
// Rows and columns are addressed with 1-based ids. The backing block comes
// from calloc, so untouched pages stay on the kernel's zero page.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  IntersectionMatrix(std::size_t rows, std::size_t cols);

  IntersectionMatrix(const IntersectionMatrix& other);
  IntersectionMatrix& operator=(const IntersectionMatrix& other);
  IntersectionMatrix(IntersectionMatrix&& other) noexcept;
  IntersectionMatrix& operator=(IntersectionMatrix&& other) noexcept;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_column() const noexcept { return stride_; }

  /// Bounds-checked access; throws std::out_of_range.
  void set(std::size_t i, std::size_t j);
  bool get(std::size_t i, std::size_t j) const;

  void set_unchecked(std::size_t i, std::size_t j) noexcept {
    --i;
    column_ptr(j)[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  bool get_unchecked(std::size_t i, std::size_t j) const noexcept {
    --i;
    return (column_ptr(j)[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  // Raw words of column j (1-based); bit (i-1) of the span is row i.
  std::span<Word> column(std::size_t j);
  std::span<const Word> column(std::size_t j) const;
  std::span<Word> column_unchecked(std::size_t j) noexcept { return {column_ptr(j), stride_}; }

  /// Word-level OR of an n-bit vector into column j.
  void or_column(std::size_t j, const BitVector& row_bits);
  /// Sets row i in every column whose bit is set in the m-bit vector.
  void or_row(std::size_t i, const BitVector& col_bits);

  void clear_column(std::size_t j);
  void clear_row(std::size_t i);

  /// Elementwise AND in place; shapes must agree.
  IntersectionMatrix& operator&=(const IntersectionMatrix& other);

  std::size_t popcount() const noexcept;
  std::size_t column_popcount(std::size_t j) const;

  IntersectionMatrix transposed() const;

  /// Set (i, j) pairs sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> set_pairs() const;

  friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) noexcept;

 private:
  struct FreeDeleter {
    void operator()(Word* p) const noexcept { std::free(p); }
  };

  Word* column_ptr(std::size_t j) noexcept { return data_.get() + (j - 1) * stride_; }
  const Word* column_ptr(std::size_t j) const noexcept { return data_.get() + (j - 1) * stride_; }
  std::size_t total_words() const noexcept { return stride_ * cols_; }
  void check_index(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::unique_ptr<Word[], FreeDeleter> data_;
};

IntersectionMatrix operator&(IntersectionMatrix a, const IntersectionMatrix& b);

/// First (i, j) in row-major order where the two matrices differ, if any.
/// Shapes must agree.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const IntersectionMatrix& a,
                                                                   const IntersectionMatrix& b);

}  // namespace ddm
