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
#include <span>
#include <string>
#include <vector>

#include "ddm/core.hpp"
#include "ddm/workload.hpp"

namespace ddm {

struct NamedMatcher {
  std::string algorithm;  // bf, sbm, gb, itm
  std::string label;      // e.g. "itm-par p=8"
  Matcher1D fn;
};

/// bf (reference, first), sbm, gb with each grid size, itm, and the
/// parallel bf/itm variants at each worker count.
std::vector<NamedMatcher> default_matchers(double space_length, std::span<const std::size_t> grid_sizes,
                                           std::span<const std::size_t> worker_counts);

struct VerifyReport {
  bool ok = true;
  std::size_t K = 0;
  std::string message;
};

struct DynamicAudit {
  std::size_t moves = 0;
  std::size_t audit_every = 1;
  double space_length = 1e6;
  std::uint64_t seed = 1;
};

/// Runs every matcher on the same 1-D instance and checks that each output
/// equals the first matcher's, that each column's popcount equals the BITS
/// count, and (when audit.moves > 0) that a DynamicMatcher stays equal to
/// brute force under random moves. Reports the first failure.
VerifyReport verify_instance(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                             std::span<const NamedMatcher> matchers, const DynamicAudit& audit = {});

/// verify_instance over `seeds` workloads seeded spec.seed, spec.seed ^ 1, ...
VerifyReport verify(const WorkloadSpec& spec, std::size_t seeds, std::span<const NamedMatcher> matchers,
                    std::size_t dynamic_moves);

/// Random move workload on a DynamicMatcher. Every `audit.audit_every`
/// moves the matrix is compared with a fresh brute-force result and both
/// trees are validated. Extents keep their length and stay inside
/// [0, space_length].
VerifyReport audit_dynamic(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                           const DynamicAudit& audit);

}  // namespace ddm
