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
#include <vector>

#include "ddm/bit_matrix.hpp"
#include "ddm/core.hpp"
#include "ddm/interval_tree.hpp"

namespace ddm {

// Keeps the intersection matrix current while 1-D extents move or resize.
// One interval tree per side: moving an update re-queries the subscription
// tree for its column, moving a subscription re-queries the update tree for
// its row. After every call the matrix equals match_bf_1d on the current
// extents.
class DynamicMatcher {
 public:
  DynamicMatcher() = default;
  DynamicMatcher(std::span<const Interval1D> subs, std::span<const Interval1D> upds);

  std::size_t n() const noexcept { return subs_.size(); }
  std::size_t m() const noexcept { return upds_.size(); }

  const IntersectionMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<Interval1D>& subscriptions() const noexcept { return subs_; }
  const std::vector<Interval1D>& updates() const noexcept { return upds_; }
  const IntervalTree& subscription_tree() const noexcept { return subs_tree_; }
  const IntervalTree& update_tree() const noexcept { return upds_tree_; }

  /// Replaces update j (1-based) by [low, high) and recomputes column j.
  /// Throws std::out_of_range for a bad index, std::invalid_argument for an
  /// empty interval; the matcher is unchanged in either case.
  void move_update(std::size_t j, double low, double high);
  /// Replaces subscription i (1-based) by [low, high) and recomputes row i.
  void move_subscription(std::size_t i, double low, double high);

 private:
  std::vector<Interval1D> subs_;
  std::vector<Interval1D> upds_;
  IntervalTree subs_tree_;
  IntervalTree upds_tree_;
  IntersectionMatrix matrix_;
};

inline DynamicMatcher dm_build(std::span<const Interval1D> subs, std::span<const Interval1D> upds) {
  return DynamicMatcher(subs, upds);
}

}  // namespace ddm
