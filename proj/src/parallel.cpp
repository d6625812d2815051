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

#include "ddm/parallel.hpp"

#include <omp.h>

#include <stdexcept>

#include "ddm/kernels.hpp"

namespace ddm {

ParallelConfig::ParallelConfig(std::size_t workers) : workers_(workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
}

ParallelConfig ParallelConfig::hardware() {
  const int procs = omp_get_num_procs();
  return ParallelConfig(procs > 0 ? static_cast<std::size_t>(procs) : 1);
}

std::vector<std::pair<std::size_t, std::size_t>> partition_columns(std::size_t m, std::size_t workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  chunks.reserve(workers);
  const std::size_t base = m / workers;
  const std::size_t extra = m % workers;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < workers; ++c) {
    const std::size_t end = begin + base + (c < extra ? 1 : 0);
    chunks.emplace_back(begin, end);
    begin = end;
  }
  return chunks;
}

namespace {

// Runs column_fn(j) for every 1-based column j, one contiguous chunk per
// OpenMP thread.
template <class ColumnFn>
void for_each_column_parallel(std::size_t m, const ParallelConfig& cfg, ColumnFn&& column_fn) {
  if (m == 0) return;
  const auto chunks = partition_columns(m, cfg.workers());
  const auto count = static_cast<long>(chunks.size());
#pragma omp parallel for schedule(static, 1) num_threads(static_cast<int>(count))
  for (long c = 0; c < count; ++c) {
    const auto [begin, end] = chunks[static_cast<std::size_t>(c)];
    for (std::size_t j = begin; j < end; ++j) column_fn(j + 1);
  }
}

}  // namespace

IntersectionMatrix match_bf_parallel(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                                     const ParallelConfig& cfg) {
  IntersectionMatrix matrix(subs.size(), upds.size());
  const kernels::BoundsSoA bounds(subs);
  for_each_column_parallel(upds.size(), cfg, [&](std::size_t j) {
    kernels::bf_column(bounds, upds[j - 1], matrix.column_unchecked(j));
  });
  return matrix;
}

IntersectionMatrix match_itm_parallel(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                                      const ParallelConfig& cfg) {
  if (upds.empty()) return IntersectionMatrix(subs.size(), 0);
  const IntervalTree tree = it_build(subs);
  IntersectionMatrix matrix(subs.size(), upds.size());
  for_each_column_parallel(upds.size(), cfg, [&](std::size_t j) {
    kernels::itm_column(tree, upds[j - 1], matrix.column_unchecked(j));
  });
  return matrix;
}

IntersectionMatrix match_itm_parallel(const IntervalTree& subs_tree, std::span<const Interval1D> upds,
                                      const ParallelConfig& cfg) {
  IntersectionMatrix matrix(subs_tree.size(), upds.size());
  for_each_column_parallel(upds.size(), cfg, [&](std::size_t j) {
    kernels::itm_column(subs_tree, upds[j - 1], matrix.column_unchecked(j));
  });
  return matrix;
}

}  // namespace ddm
