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

#include "ddm/core.hpp"

#include <stdexcept>
#include <string>

namespace ddm {

std::string_view to_string(ExtentKind kind) noexcept {
  return kind == ExtentKind::Subscription ? "S" : "U";
}

Interval1D::Interval1D(double low, double high, std::size_t id, ExtentKind kind)
    : low_(low), high_(high), id_(id), kind_(kind) {
  // Written as !(low < high) so NaN bounds are rejected too.
  if (!(low < high)) {
    throw std::invalid_argument("interval [" + std::to_string(low) + "," + std::to_string(high) +
                                "] is empty or inverted");
  }
  if (id < 1) throw std::invalid_argument("interval id must be >= 1");
}

Extent::Extent(std::size_t id, ExtentKind kind, std::span<const std::pair<double, double>> bounds)
    : id_(id), kind_(kind) {
  if (bounds.empty()) throw std::invalid_argument("extent needs at least one dimension");
  proj_.reserve(bounds.size());
  for (const auto& [lo, hi] : bounds) proj_.emplace_back(lo, hi, id, kind);
}

bool intersect_extent(const Extent& s, const Extent& u) {
  if (s.dims() != u.dims()) {
    throw std::invalid_argument("extent dimension mismatch: " + std::to_string(s.dims()) + " vs " +
                                std::to_string(u.dims()));
  }
  for (std::size_t k = 0; k < s.dims(); ++k) {
    if (!intersect_1d(s.proj(k), u.proj(k))) return false;
  }
  return true;
}

namespace {

void check_set(const std::vector<Extent>& set, ExtentKind kind, std::size_t dims) {
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    const Extent& e = set[pos];
    if (e.kind() != kind) {
      throw std::invalid_argument("extent " + std::to_string(e.id()) + " has kind " +
                                  std::string(to_string(e.kind())) + ", expected " +
                                  std::string(to_string(kind)));
    }
    if (e.id() != pos + 1) {
      throw std::invalid_argument("extent at position " + std::to_string(pos) + " has id " +
                                  std::to_string(e.id()) + ", expected " + std::to_string(pos + 1));
    }
    if (e.dims() != dims) {
      throw std::invalid_argument("extent " + std::to_string(e.id()) + " has " + std::to_string(e.dims()) +
                                  " dimensions, instance has " + std::to_string(dims));
    }
  }
}

std::vector<Interval1D> axis(const std::vector<Extent>& set, std::size_t k) {
  std::vector<Interval1D> out;
  out.reserve(set.size());
  for (const Extent& e : set) out.push_back(e.proj(k));
  return out;
}

}  // namespace

MatchInstance::MatchInstance(std::vector<Extent> subscriptions, std::vector<Extent> updates, std::size_t dims)
    : subs_(std::move(subscriptions)), upds_(std::move(updates)), dims_(dims) {
  if (dims_ < 1) throw std::invalid_argument("instance needs at least one dimension");
  check_set(subs_, ExtentKind::Subscription, dims_);
  check_set(upds_, ExtentKind::Update, dims_);
}

std::vector<Interval1D> MatchInstance::subscription_projections(std::size_t k) const {
  if (k >= dims_) throw std::out_of_range("axis out of range");
  return axis(subs_, k);
}

std::vector<Interval1D> MatchInstance::update_projections(std::size_t k) const {
  if (k >= dims_) throw std::out_of_range("axis out of range");
  return axis(upds_, k);
}

IntersectionMatrix match_d(const MatchInstance& inst, const Matcher1D& match_1d) {
  IntersectionMatrix result = match_1d(inst.subscription_projections(0), inst.update_projections(0));
  for (std::size_t k = 1; k < inst.dims(); ++k) {
    result &= match_1d(inst.subscription_projections(k), inst.update_projections(k));
  }
  return result;
}

}  // namespace ddm
