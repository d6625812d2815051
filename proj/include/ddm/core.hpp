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
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ddm/bit_matrix.hpp"

namespace ddm {

enum class ExtentKind : std::uint8_t { Subscription, Update };

std::string_view to_string(ExtentKind kind) noexcept;

// Projection of one extent on one axis. The interval is treated as open:
// two intervals that only share an endpoint do not intersect.
class Interval1D {
 public:
  /// Throws std::invalid_argument unless low < high and id >= 1.
  Interval1D(double low, double high, std::size_t id, ExtentKind kind = ExtentKind::Subscription);

  constexpr double low() const noexcept { return low_; }
  constexpr double high() const noexcept { return high_; }
  std::size_t id() const noexcept { return id_; }
  ExtentKind kind() const noexcept { return kind_; }

  friend bool operator==(const Interval1D&, const Interval1D&) = default;

 private:
  double low_;
  double high_;
  std::size_t id_;
  ExtentKind kind_;
};

constexpr bool intersect_1d(const Interval1D& x, const Interval1D& y) noexcept {
  return x.low() < y.high() && y.low() < x.high();
}

// An axis-aligned d-rectangle.
class Extent {
 public:
  /// One (low, high) pair per dimension; at least one dimension.
  Extent(std::size_t id, ExtentKind kind, std::span<const std::pair<double, double>> bounds);
  Extent(std::size_t id, ExtentKind kind, std::initializer_list<std::pair<double, double>> bounds)
      : Extent(id, kind, std::span<const std::pair<double, double>>(bounds.begin(), bounds.size())) {}

  std::size_t id() const noexcept { return id_; }
  ExtentKind kind() const noexcept { return kind_; }
  std::size_t dims() const noexcept { return proj_.size(); }
  const Interval1D& proj(std::size_t k) const { return proj_.at(k); }
  std::span<const Interval1D> projections() const noexcept { return proj_; }

  friend bool operator==(const Extent&, const Extent&) = default;

 private:
  std::size_t id_;
  ExtentKind kind_;
  std::vector<Interval1D> proj_;
};

/// True iff every pair of projections intersects. Throws on dimension mismatch.
bool intersect_extent(const Extent& s, const Extent& u);

// Subscription and update sets of a matching problem. Ids are positions:
// subscriptions()[i].id() == i + 1, and likewise for updates.
class MatchInstance {
 public:
  MatchInstance() = default;
  MatchInstance(std::vector<Extent> subscriptions, std::vector<Extent> updates, std::size_t dims);

  const std::vector<Extent>& subscriptions() const noexcept { return subs_; }
  const std::vector<Extent>& updates() const noexcept { return upds_; }
  std::size_t n() const noexcept { return subs_.size(); }
  std::size_t m() const noexcept { return upds_.size(); }
  std::size_t dims() const noexcept { return dims_; }

  /// Axis-k projections of the subscription (resp. update) set, in id order.
  std::vector<Interval1D> subscription_projections(std::size_t k) const;
  std::vector<Interval1D> update_projections(std::size_t k) const;

 private:
  std::vector<Extent> subs_;
  std::vector<Extent> upds_;
  std::size_t dims_ = 1;
};

/// Any one-dimensional matcher: (S, U) -> n x m matrix.
using Matcher1D =
    std::function<IntersectionMatrix(std::span<const Interval1D>, std::span<const Interval1D>)>;

/// Runs the 1-D matcher on every axis and ANDs the per-axis matrices.
IntersectionMatrix match_d(const MatchInstance& inst, const Matcher1D& match_1d);

}  // namespace ddm
