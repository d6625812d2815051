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

// Command-line driver: benchmark, verify, dynamic audit, workload and
// matrix file I/O.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddm/bench.hpp"
#include "ddm/extent_io.hpp"
#include "ddm/parallel.hpp"
#include "ddm/verify.hpp"
#include "ddm/workload.hpp"

namespace {

struct BenchArgs {
  std::vector<std::string> algos;
  std::size_t extents = 0;
  double alpha = 1.0;
  double length = 1e6;
  std::size_t dims = 1;
  std::vector<std::size_t> threads;
  std::optional<std::size_t> grid_cells;
  std::size_t reps = 30;
  std::uint64_t seed = 1;
  std::string csv;
  bool fixed_workload = false;
};

int run_bench_cmd(const BenchArgs& a) {
  std::vector<std::size_t> threads = a.threads;
  if (threads.empty()) threads.push_back(ddm::ParallelConfig::hardware().workers());

  std::vector<ddm::BenchResult> results;
  for (const std::string& name : a.algos) {
    const ddm::Algo algo = ddm::parse_algo(name);
    const std::vector<std::size_t> ps = ddm::is_parallel(algo) ? threads : std::vector<std::size_t>{1};
    for (std::size_t p : ps) {
      ddm::BenchOptions opts;
      opts.workload = {a.extents, a.alpha, a.length, a.dims, a.seed};
      opts.algo = algo;
      opts.threads = p;
      opts.grid_cells = a.grid_cells;
      opts.reps = a.reps;
      opts.fixed_workload = a.fixed_workload;
      results.push_back(ddm::run_bench(opts));
    }
  }
  ddm::fill_speedups(results);

  for (const auto& r : results) {
    std::printf("%-8s N=%zu alpha=%g d=%zu p=%zu reps=%zu mean=%.6fs stddev=%.6fs K=%zu", r.algo.c_str(), r.N,
                r.alpha, r.d, r.p, r.reps, r.mean, r.stddev, r.K);
    if (r.G) std::printf(" G=%zu", *r.G);
    if (r.speedup) std::printf(" speedup=%.3f", *r.speedup);
    std::printf("\n");
  }
  if (a.csv == "-") {
    ddm::write_csv(std::cout, results);
  } else if (!a.csv.empty()) {
    ddm::write_csv_file(a.csv, results);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region matching for data distribution management: brute force, sort-based, grid-based and "
               "interval-tree matchers"};
  app.require_subcommand(1);

  // bench
  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time one or more matchers on random workloads");
  bench_cmd->add_option("--algo", bench.algos, "bf, sbm, gb, itm, bf-par, itm-par (repeatable)")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--extents,-N", bench.extents, "Total extent count N (even)")->required();
  bench_cmd->add_option("--alpha,-a", bench.alpha, "Overlapping degree")->required();
  bench_cmd->add_option("--dims,-d", bench.dims, "Dimensions")->capture_default_str();
  bench_cmd->add_option("--length,-L", bench.length, "Routing space length per axis")->capture_default_str();
  bench_cmd->add_option("--threads,-p", bench.threads, "Worker counts for parallel matchers (default: all cores)")
      ->delimiter(',');
  bench_cmd->add_option("--grid-cells,-G", bench.grid_cells, "Grid cells for gb");
  bench_cmd->add_option("--reps,-r", bench.reps, "Repetitions per configuration")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base RNG seed; rep k uses seed XOR k")->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "Write results as CSV to PATH ('-' for stdout)");
  bench_cmd->add_flag("--fixed-workload", bench.fixed_workload, "Time every rep on the base-seed workload");

  // verify
  std::size_t v_extents = 0;
  double v_alpha = 1.0;
  double v_length = 1e6;
  std::size_t v_seeds = 1;
  std::uint64_t v_seed = 1;
  std::size_t v_moves = 100;
  std::vector<std::size_t> v_grid{1, 64};
  std::vector<std::size_t> v_threads{1, 2, 8};
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all matchers on random workloads");
  verify_cmd->add_option("--extents,-N", v_extents, "Total extent count N (even)")->required();
  verify_cmd->add_option("--alpha,-a", v_alpha, "Overlapping degree")->required();
  verify_cmd->add_option("--seeds", v_seeds, "Number of workloads to check")->capture_default_str();
  verify_cmd->add_option("--seed", v_seed, "Base RNG seed")->capture_default_str();
  verify_cmd->add_option("--length,-L", v_length, "Routing space length")->capture_default_str();
  verify_cmd->add_option("--moves", v_moves, "Dynamic moves audited per workload")->capture_default_str();
  verify_cmd->add_option("--grid-cells,-G", v_grid, "Grid sizes to check")->delimiter(',');
  verify_cmd->add_option("--threads,-p", v_threads, "Worker counts to check")->delimiter(',');

  // dynamic
  std::size_t d_extents = 0;
  double d_alpha = 1.0;
  double d_length = 1e6;
  std::size_t d_moves = 1000;
  std::size_t d_every = 1;
  std::uint64_t d_seed = 1;
  auto* dynamic_cmd = app.add_subcommand("dynamic", "Random extent moves with brute-force auditing");
  dynamic_cmd->add_option("--extents,-N", d_extents, "Total extent count N (even)")->required();
  dynamic_cmd->add_option("--moves", d_moves, "Number of moves")->capture_default_str();
  dynamic_cmd->add_option("--audit-every", d_every, "Audit against brute force every k moves")
      ->capture_default_str();
  dynamic_cmd->add_option("--alpha,-a", d_alpha, "Overlapping degree")->capture_default_str();
  dynamic_cmd->add_option("--length,-L", d_length, "Routing space length")->capture_default_str();
  dynamic_cmd->add_option("--seed", d_seed, "RNG seed")->capture_default_str();

  // generate
  ddm::WorkloadSpec g_spec;
  std::string g_out;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random workload in the extent text format");
  generate_cmd->add_option("--extents,-N", g_spec.extents, "Total extent count N (even)")->required();
  generate_cmd->add_option("--alpha,-a", g_spec.alpha, "Overlapping degree")->required();
  generate_cmd->add_option("--out,-o", g_out, "Output file ('-' for stdout)")->required();
  generate_cmd->add_option("--dims,-d", g_spec.dims, "Dimensions")->capture_default_str();
  generate_cmd->add_option("--length,-L", g_spec.length, "Routing space length")->capture_default_str();
  generate_cmd->add_option("--seed", g_spec.seed, "RNG seed")->capture_default_str();

  // match
  std::string m_in;
  std::string m_out = "-";
  std::string m_algo = "itm";
  std::size_t m_threads = ddm::ParallelConfig::hardware().workers();
  std::optional<std::size_t> m_grid;
  auto* match_cmd = app.add_subcommand("match", "Match an extent file and write the intersection matrix");
  match_cmd->add_option("--in,-i", m_in, "Extent file")->required()->check(CLI::ExistingFile);
  match_cmd->add_option("--out,-o", m_out, "Matrix output ('-' for stdout)")->capture_default_str();
  match_cmd->add_option("--algo", m_algo, "bf, sbm, gb, itm, bf-par, itm-par")->capture_default_str();
  match_cmd->add_option("--threads,-p", m_threads, "Worker count for parallel matchers");
  match_cmd->add_option("--grid-cells,-G", m_grid, "Grid cells for gb");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) return run_bench_cmd(bench);

    if (*verify_cmd) {
      const auto matchers = ddm::default_matchers(v_length, v_grid, v_threads);
      const ddm::WorkloadSpec spec{v_extents, v_alpha, v_length, 1, v_seed};
      const ddm::VerifyReport report = ddm::verify(spec, v_seeds, matchers, v_moves);
      std::cout << (v_seeds > 1 && report.ok ? std::to_string(v_seeds) + " seeds, " : "") << report.message << '\n';
      return report.ok ? 0 : 1;
    }

    if (*dynamic_cmd) {
      const ddm::WorkloadSpec spec{d_extents, d_alpha, d_length, 1, d_seed};
      const ddm::MatchInstance inst = ddm::generate_workload(spec);
      const ddm::DynamicAudit audit{d_moves, d_every, d_length, d_seed};
      const ddm::VerifyReport report =
          ddm::audit_dynamic(inst.subscription_projections(0), inst.update_projections(0), audit);
      std::cout << report.message << '\n';
      return report.ok ? 0 : 1;
    }

    if (*generate_cmd) {
      const ddm::MatchInstance inst = ddm::generate_workload(g_spec);
      if (g_out == "-") {
        ddm::write_extents(std::cout, inst);
      } else {
        ddm::write_extents_file(g_out, inst);
      }
      return 0;
    }

    if (*match_cmd) {
      const ddm::MatchInstance inst = ddm::read_extents_file(m_in);
      double lo = std::numeric_limits<double>::max();
      double hi = std::numeric_limits<double>::lowest();
      for (const auto* set : {&inst.subscriptions(), &inst.updates()}) {
        for (const auto& e : *set) {
          for (const auto& iv : e.projections()) {
            lo = std::min(lo, iv.low());
            hi = std::max(hi, iv.high());
          }
        }
      }
      if (!(lo < hi)) {
        lo = 0.0;
        hi = 1.0;
      }
      const auto matcher = ddm::make_matcher(ddm::parse_algo(m_algo), m_threads, m_grid, lo, hi);
      const ddm::IntersectionMatrix matrix = ddm::match_d(inst, matcher);
      if (m_out == "-") {
        ddm::write_matrix(std::cout, matrix);
      } else {
        std::ofstream out(m_out);
        if (!out) throw std::runtime_error("cannot open " + m_out + " for writing");
        ddm::write_matrix(out, matrix);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
