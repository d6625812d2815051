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

#include "ddm/core.hpp"

namespace ddm {

// Random workload: N extents, half subscriptions and half updates, each of
// side l = alpha * L / N placed uniformly on [0, L] along every axis.
struct WorkloadSpec {
  std::size_t extents = 0;  // N
  double alpha = 1.0;       // overlapping degree N * l / L
  double length = 1e6;      // L
  std::size_t dims = 1;
  std::uint64_t seed = 1;

  double extent_length() const noexcept { return alpha * length / static_cast<double>(extents); }

  /// Throws std::invalid_argument when N is odd, alpha or L is not positive,
  /// dims is zero, or l exceeds L. N = 0 is accepted and yields no extents.
  void validate() const;
};

/// Deterministic in the spec (including the seed); uses std::mt19937_64.
MatchInstance generate_workload(const WorkloadSpec& spec);

/// Seed for repetition `rep` of a run seeded with `base`.
constexpr std::uint64_t rep_seed(std::uint64_t base, std::size_t rep) noexcept {
  return base ^ static_cast<std::uint64_t>(rep);
}

}  // namespace ddm
