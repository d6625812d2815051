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
#include "ddm/interval_tree.hpp"

namespace ddm {

class ParallelConfig {
 public:
  /// Throws std::invalid_argument if workers == 0.
  explicit ParallelConfig(std::size_t workers);

  /// One worker per logical core available to this process.
  static ParallelConfig hardware();

  std::size_t workers() const noexcept { return workers_; }

 private:
  std::size_t workers_;
};

/// Splits update positions [0, m) into `workers` contiguous half-open ranges
/// whose sizes differ by at most one. Trailing ranges are empty when
/// workers > m.
std::vector<std::pair<std::size_t, std::size_t>> partition_columns(std::size_t m, std::size_t workers);

// OpenMP versions of the brute-force and interval-tree matchers. Worker w
// owns the columns of chunk w and writes nothing else, so the output is the
// same for every worker count.

IntersectionMatrix match_bf_parallel(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                                     const ParallelConfig& cfg);

/// Builds the tree sequentially, then runs the queries in parallel.
IntersectionMatrix match_itm_parallel(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                                      const ParallelConfig& cfg);

/// Query phase only, against a tree built by the caller. The tree is only read.
IntersectionMatrix match_itm_parallel(const IntervalTree& subs_tree, std::span<const Interval1D> upds,
                                      const ParallelConfig& cfg);

}  // namespace ddm
