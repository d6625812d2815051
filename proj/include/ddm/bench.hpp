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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddm/core.hpp"
#include "ddm/workload.hpp"

namespace ddm {

enum class Algo { BruteForce, SortBased, GridBased, IntervalTree, BruteForceParallel, IntervalTreeParallel };

/// Accepts bf, sbm, gb, itm, bf-par, itm-par; throws std::invalid_argument otherwise.
Algo parse_algo(std::string_view name);
std::string_view to_string(Algo algo) noexcept;
bool is_parallel(Algo algo) noexcept;

/// The 1-D matcher behind `algo`. The grid covers [space_lo, space_hi].
/// Throws std::invalid_argument for gb without grid_cells.
Matcher1D make_matcher(Algo algo, std::size_t threads, std::optional<std::size_t> grid_cells, double space_lo,
                       double space_hi);

struct BenchOptions {
  WorkloadSpec workload;
  Algo algo = Algo::IntervalTree;
  std::size_t threads = 1;
  std::optional<std::size_t> grid_cells;
  std::size_t reps = 30;
  bool fixed_workload = false;  // reuse the base-seed instance for every rep
};

struct BenchResult {
  std::string algo;
  std::size_t N = 0;
  double alpha = 0;
  std::size_t d = 1;
  std::size_t p = 1;
  std::optional<std::size_t> G;
  std::size_t reps = 0;
  std::vector<double> wall_times;  // seconds, one per rep
  double mean = 0;
  double stddev = 0;               // sample standard deviation
  std::size_t K = 0;               // intersections in the base-seed instance
  std::optional<double> speedup;
};

/// Times `reps` full matching calls (matrix allocation and preprocessing
/// included; workload generation excluded).
BenchResult run_bench(const BenchOptions& opts);

/// Fills speedup = mean(p=1) / mean for every result that has a p=1
/// baseline with the same algo, N, alpha, d and G.
void fill_speedups(std::vector<BenchResult>& results);

inline constexpr std::string_view kCsvHeader = "algo,N,alpha,d,p,G,reps,mean_s,stddev_s,K,speedup";

/// Rows sorted by (algo, N, alpha, d, p, G). Per-rep timings are not written.
void write_csv(std::ostream& out, std::vector<BenchResult> results);
void write_csv_file(const std::string& path, const std::vector<BenchResult>& results);
std::vector<BenchResult> read_csv(std::istream& in);

}  // namespace ddm
