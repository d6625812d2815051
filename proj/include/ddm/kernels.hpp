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

// Per-column kernels shared by the serial matchers and their OpenMP
// counterparts. Each call writes only the words of one matrix column.

#include <span>
#include <vector>

#include "ddm/bit_matrix.hpp"
#include "ddm/core.hpp"
#include "ddm/interval_tree.hpp"

namespace ddm::kernels {

// Subscription bounds split into two flat arrays for the brute-force scan.
struct BoundsSoA {
  BoundsSoA() = default;
  explicit BoundsSoA(std::span<const Interval1D> intervals);

  std::vector<double> lows;
  std::vector<double> highs;
};

/// Fills column `col` with intersect_1d(S_i, q) for every i. Uses AVX2 or
/// SSE2 compares when the CPU has them.
void bf_column(const BoundsSoA& subs, const Interval1D& q, std::span<Word> col) noexcept;
/// Plain-loop reference for bf_column.
void bf_column_scalar(const BoundsSoA& subs, const Interval1D& q, std::span<Word> col) noexcept;

/// Sets the bits of every stored subscription that intersects q.
inline void itm_column(const IntervalTree& tree, const Interval1D& q, std::span<Word> col) noexcept {
  Word* words = col.data();
  tree.query(q, [words](const Interval1D& s) {
    const std::size_t i = s.id() - 1;
    words[i / kWordBits] |= Word{1} << (i % kWordBits);
  });
}

}  // namespace ddm::kernels
