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

#include "ddm/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ddm/matchers.hpp"
#include "ddm/parallel.hpp"

namespace ddm {

namespace {

struct AlgoName {
  Algo algo;
  std::string_view name;
};

constexpr AlgoName kAlgoNames[] = {
    {Algo::BruteForce, "bf"},           {Algo::SortBased, "sbm"},
    {Algo::GridBased, "gb"},            {Algo::IntervalTree, "itm"},
    {Algo::BruteForceParallel, "bf-par"}, {Algo::IntervalTreeParallel, "itm-par"},
};

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class T>
T parse_field(std::string_view s, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error(std::string("bad CSV field ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

auto sort_key(const BenchResult& r) {
  return std::tuple(r.algo, r.N, r.alpha, r.d, r.p, r.G.value_or(0));
}

}  // namespace

Algo parse_algo(std::string_view name) {
  for (const auto& entry : kAlgoNames) {
    if (entry.name == name) return entry.algo;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected bf, sbm, gb, itm, bf-par or itm-par)");
}

std::string_view to_string(Algo algo) noexcept {
  for (const auto& entry : kAlgoNames) {
    if (entry.algo == algo) return entry.name;
  }
  return "?";
}

bool is_parallel(Algo algo) noexcept {
  return algo == Algo::BruteForceParallel || algo == Algo::IntervalTreeParallel;
}

Matcher1D make_matcher(Algo algo, std::size_t threads, std::optional<std::size_t> grid_cells, double space_lo,
                       double space_hi) {
  switch (algo) {
    case Algo::BruteForce:
      return match_bf_1d;
    case Algo::SortBased:
      return match_sbm_1d;
    case Algo::IntervalTree:
      return match_itm_1d;
    case Algo::GridBased: {
      if (!grid_cells) throw std::invalid_argument("gb needs a grid size: pass --grid-cells G");
      const GridConfig grid(*grid_cells, space_lo, space_hi);
      return [grid](std::span<const Interval1D> s, std::span<const Interval1D> u) { return match_gb_1d(s, u, grid); };
    }
    case Algo::BruteForceParallel: {
      const ParallelConfig cfg(threads);
      return [cfg](std::span<const Interval1D> s, std::span<const Interval1D> u) {
        return match_bf_parallel(s, u, cfg);
      };
    }
    case Algo::IntervalTreeParallel: {
      const ParallelConfig cfg(threads);
      return [cfg](std::span<const Interval1D> s, std::span<const Interval1D> u) {
        return match_itm_parallel(s, u, cfg);
      };
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

BenchResult run_bench(const BenchOptions& opts) {
  opts.workload.validate();
  if (opts.reps == 0) throw std::invalid_argument("reps must be at least 1");
  if (opts.threads == 0) throw std::invalid_argument("threads must be at least 1");
  const Matcher1D matcher = make_matcher(opts.algo, opts.threads, opts.grid_cells, 0.0, opts.workload.length);

  BenchResult result;
  result.algo = std::string(to_string(opts.algo));
  result.N = opts.workload.extents;
  result.alpha = opts.workload.alpha;
  result.d = opts.workload.dims;
  result.p = is_parallel(opts.algo) ? opts.threads : 1;
  if (opts.algo == Algo::GridBased) result.G = opts.grid_cells;
  result.reps = opts.reps;

  std::optional<MatchInstance> fixed;
  if (opts.fixed_workload) fixed = generate_workload(opts.workload);

  for (std::size_t rep = 0; rep < opts.reps; ++rep) {
    MatchInstance fresh;
    if (!fixed) {
      WorkloadSpec spec = opts.workload;
      spec.seed = rep_seed(opts.workload.seed, rep);
      fresh = generate_workload(spec);
    }
    const MatchInstance& inst = fixed ? *fixed : fresh;

    const auto start = std::chrono::steady_clock::now();
    const IntersectionMatrix matrix = match_d(inst, matcher);
    const auto stop = std::chrono::steady_clock::now();

    result.wall_times.push_back(std::chrono::duration<double>(stop - start).count());
    if (rep == 0) result.K = matrix.popcount();
  }

  const double n = static_cast<double>(result.wall_times.size());
  result.mean = std::accumulate(result.wall_times.begin(), result.wall_times.end(), 0.0) / n;
  if (result.wall_times.size() > 1) {
    double ss = 0;
    for (double t : result.wall_times) ss += (t - result.mean) * (t - result.mean);
    result.stddev = std::sqrt(ss / (n - 1));
  }
  return result;
}

void fill_speedups(std::vector<BenchResult>& results) {
  for (BenchResult& r : results) {
    for (const BenchResult& base : results) {
      if (base.p == 1 && base.algo == r.algo && base.N == r.N && base.alpha == r.alpha && base.d == r.d &&
          base.G == r.G && r.mean > 0) {
        r.speedup = base.mean / r.mean;
        break;
      }
    }
  }
}

void write_csv(std::ostream& out, std::vector<BenchResult> results) {
  std::stable_sort(results.begin(), results.end(),
                   [](const BenchResult& a, const BenchResult& b) { return sort_key(a) < sort_key(b); });
  out << kCsvHeader << '\n';
  for (const BenchResult& r : results) {
    out << r.algo << ',' << r.N << ',' << format_double(r.alpha) << ',' << r.d << ',' << r.p << ',';
    if (r.G) out << *r.G;
    out << ',' << r.reps << ',' << format_double(r.mean) << ',' << format_double(r.stddev) << ',' << r.K << ',';
    if (r.speedup) out << format_double(*r.speedup);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<BenchResult>& results) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(out, results);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<BenchResult> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing CSV header");
  std::vector<BenchResult> results;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 11) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields: " + line);
    BenchResult r;
    r.algo = std::string(f[0]);
    r.N = parse_field<std::size_t>(f[1], "N");
    r.alpha = parse_field<double>(f[2], "alpha");
    r.d = parse_field<std::size_t>(f[3], "d");
    r.p = parse_field<std::size_t>(f[4], "p");
    if (!f[5].empty()) r.G = parse_field<std::size_t>(f[5], "G");
    r.reps = parse_field<std::size_t>(f[6], "reps");
    r.mean = parse_field<double>(f[7], "mean_s");
    r.stddev = parse_field<double>(f[8], "stddev_s");
    r.K = parse_field<std::size_t>(f[9], "K");
    if (!f[10].empty()) r.speedup = parse_field<double>(f[10], "speedup");
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ddm
