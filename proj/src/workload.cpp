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

#include "ddm/workload.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ddm {

void WorkloadSpec::validate() const {
  if (extents % 2 != 0) throw std::invalid_argument("extent count must be even, got " + std::to_string(extents));
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (!(length > 0)) throw std::invalid_argument("routing space length must be positive");
  if (dims == 0) throw std::invalid_argument("dims must be at least 1");
  if (extents > 0 && extent_length() > length) {
    throw std::invalid_argument("extent length alpha*L/N = " + std::to_string(extent_length()) +
                                " exceeds L; alpha too large for N");
  }
}

MatchInstance generate_workload(const WorkloadSpec& spec) {
  spec.validate();
  const std::size_t half = spec.extents / 2;
  std::vector<Extent> subs;
  std::vector<Extent> upds;
  if (half == 0) return MatchInstance(std::move(subs), std::move(upds), spec.dims);

  const double l = spec.extent_length();
  const double L = spec.length;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> place(0.0, L - l);
  std::vector<std::pair<double, double>> bounds(spec.dims);

  auto make = [&](std::size_t id, ExtentKind kind) {
    for (auto& [lo, hi] : bounds) {
      lo = l < L ? place(rng) : 0.0;
      hi = lo + l;
      if (hi > L) hi = L;
    }
    return Extent(id, kind, bounds);
  };
  subs.reserve(half);
  upds.reserve(half);
  for (std::size_t i = 1; i <= half; ++i) subs.push_back(make(i, ExtentKind::Subscription));
  for (std::size_t j = 1; j <= half; ++j) upds.push_back(make(j, ExtentKind::Update));
  return MatchInstance(std::move(subs), std::move(upds), spec.dims);
}

}  // namespace ddm
