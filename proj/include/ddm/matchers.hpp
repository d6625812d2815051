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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ddm/bit_matrix.hpp"
#include "ddm/core.hpp"

namespace ddm {

// One-dimensional matchers. Each takes the subscription projections S
// (ids 1..n) and the update projections U (ids 1..m) and returns the n x m
// intersection matrix. All of them agree bit for bit with match_bf_1d.

IntersectionMatrix match_bf_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds);
IntersectionMatrix match_sbm_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds);
IntersectionMatrix match_itm_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds);

// Uniform partition of [lo, hi) into `cells` cells of equal width.
class GridConfig {
 public:
  /// Throws std::invalid_argument unless cells >= 1 and lo < hi.
  GridConfig(std::size_t cells, double lo, double hi);

  std::size_t cells() const noexcept { return cells_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double cell_width() const noexcept { return width_; }

  /// Inclusive range of cells an interval is filed under. The cell holding
  /// the upper endpoint is included even when the endpoint sits exactly on a
  /// cell boundary; that costs at most one extra cell and keeps the mapping
  /// monotone under rounding, so every overlapping pair shares a cell.
  std::pair<std::size_t, std::size_t> cell_range(const Interval1D& iv) const noexcept;

 private:
  std::size_t cell_of(double x) const noexcept;

  std::size_t cells_;
  double lo_;
  double hi_;
  double width_;
};

/// Grid-based matching with a brute-force pass inside each cell, so no
/// spurious pairs are reported. Every interval must lie within [lo, hi];
/// throws std::invalid_argument otherwise.
IntersectionMatrix match_gb_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                               const GridConfig& cfg);

// One entry of the sort-based matcher's endpoint list.
struct SbmEndpoint {
  double x;
  bool upper;
  ExtentKind kind;
  std::size_t id;
};

/// The 2(n+m) endpoints in scan order: by coordinate, upper endpoints before
/// lower endpoints at equal coordinates (so touching intervals never meet),
/// then by kind and id.
std::vector<SbmEndpoint> sbm_endpoints(std::span<const Interval1D> subs, std::span<const Interval1D> upds);

// Counts intersections against a fixed interval set using two binary
// searches over its sorted start and end points.
class BitsIndex {
 public:
  explicit BitsIndex(std::span<const Interval1D> intervals);

  std::size_t size() const noexcept { return starts_.size(); }
  /// |B| minus those ending at or before q.low minus those starting at or after q.high.
  std::size_t count(const Interval1D& q) const noexcept;

 private:
  std::vector<double> starts_;
  std::vector<double> ends_;
};

inline std::size_t bits_count(const BitsIndex& index, const Interval1D& q) noexcept { return index.count(q); }

}  // namespace ddm
