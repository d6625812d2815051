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

#include "ddm/dynamic.hpp"

#include <stdexcept>
#include <string>

#include "ddm/kernels.hpp"

namespace ddm {

namespace {

std::vector<Interval1D> relabel(std::span<const Interval1D> in, ExtentKind kind) {
  std::vector<Interval1D> out;
  out.reserve(in.size());
  for (std::size_t pos = 0; pos < in.size(); ++pos) {
    if (in[pos].id() != pos + 1) {
      throw std::invalid_argument("interval at position " + std::to_string(pos) + " has id " +
                                  std::to_string(in[pos].id()));
    }
    out.emplace_back(in[pos].low(), in[pos].high(), pos + 1, kind);
  }
  return out;
}

}  // namespace

DynamicMatcher::DynamicMatcher(std::span<const Interval1D> subs, std::span<const Interval1D> upds)
    : subs_(relabel(subs, ExtentKind::Subscription)),
      upds_(relabel(upds, ExtentKind::Update)),
      subs_tree_(subs_),
      upds_tree_(upds_),
      matrix_(subs_.size(), upds_.size()) {
  for (std::size_t j = 1; j <= upds_.size(); ++j) {
    kernels::itm_column(subs_tree_, upds_[j - 1], matrix_.column(j));
  }
}

void DynamicMatcher::move_update(std::size_t j, double low, double high) {
  if (j < 1 || j > upds_.size()) throw std::out_of_range("update index " + std::to_string(j) + " out of range");
  const Interval1D moved(low, high, j, ExtentKind::Update);
  upds_tree_.erase(upds_[j - 1]);
  upds_tree_.insert(moved);
  upds_[j - 1] = moved;
  matrix_.clear_column(j);
  kernels::itm_column(subs_tree_, moved, matrix_.column(j));
}

void DynamicMatcher::move_subscription(std::size_t i, double low, double high) {
  if (i < 1 || i > subs_.size()) {
    throw std::out_of_range("subscription index " + std::to_string(i) + " out of range");
  }
  const Interval1D moved(low, high, i, ExtentKind::Subscription);
  subs_tree_.erase(subs_[i - 1]);
  subs_tree_.insert(moved);
  subs_[i - 1] = moved;
  // Column-major storage: clearing a row is one bit per column.
  matrix_.clear_row(i);
  upds_tree_.query(moved, [&](const Interval1D& u) { matrix_.set_unchecked(i, u.id()); });
}

}  // namespace ddm
