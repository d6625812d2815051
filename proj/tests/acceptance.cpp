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

// Acceptance driver: one PASS / FAIL / SKIP line per criterion, nonzero
// exit if any criterion fails.

#include <omp.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ddm/bench.hpp"
#include "ddm/dynamic.hpp"
#include "ddm/interval_tree.hpp"
#include "ddm/matchers.hpp"
#include "ddm/parallel.hpp"
#include "ddm/workload.hpp"
#include "fixtures.hpp"

using namespace ddm;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe_diff(const IntersectionMatrix& expected, const IntersectionMatrix& got) {
  const auto d = first_difference(expected, got);
  if (!d) return "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols());
  return "(" + std::to_string(d->first) + "," + std::to_string(d->second) + "): expected " +
         std::to_string(expected.get(d->first, d->second)) + ", got " + std::to_string(got.get(d->first, d->second));
}

struct Candidate {
  std::string label;
  std::function<IntersectionMatrix(std::span<const Interval1D>, std::span<const Interval1D>)> fn;
};

std::vector<Candidate> criterion1_matchers(double length) {
  std::vector<Candidate> out;
  out.push_back({"sbm", match_sbm_1d});
  for (std::size_t g : {1u, 64u}) {
    out.push_back({"gb G=" + std::to_string(g), [g, length](auto s, auto u) {
                     return match_gb_1d(s, u, GridConfig(g, 0.0, length));
                   }});
  }
  out.push_back({"itm", match_itm_1d});
  for (std::size_t p : {1u, 2u, 8u}) {
    out.push_back({"itm-par p=" + std::to_string(p),
                   [p](auto s, auto u) { return match_itm_parallel(s, u, ParallelConfig(p)); }});
  }
  return out;
}

// Criteria 1 and 2 share their instances.
std::pair<Outcome, Outcome> oracle_equivalence() {
  const double length = 1e6;
  const auto candidates = criterion1_matchers(length);
  std::size_t instances = 0;
  std::size_t total_k = 0;
  std::string fail1;
  std::string fail2;
  const auto t0 = Clock::now();
  for (std::size_t n : {200u, 2000u, 20000u}) {
    for (double alpha : {0.01, 1.0, 100.0}) {
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const MatchInstance inst = generate_workload({n, alpha, length, 1, seed});
        const auto subs = inst.subscription_projections(0);
        const auto upds = inst.update_projections(0);
        const IntersectionMatrix ref = match_bf_1d(subs, upds);
        ++instances;
        total_k += ref.popcount();
        const std::string where = "N=" + std::to_string(n) + " alpha=" + std::to_string(alpha).substr(0, 6) +
                                  " seed=" + std::to_string(seed);
        if (fail1.empty()) {
          for (const Candidate& c : candidates) {
            const IntersectionMatrix got = c.fn(subs, upds);
            if (!(got == ref)) {
              fail1 = where + ": " + c.label + " differs from bf at " + describe_diff(ref, got);
              break;
            }
          }
        }
        if (fail2.empty()) {
          const BitsIndex index(subs);
          for (std::size_t j = 1; j <= upds.size(); ++j) {
            const std::size_t pc = ref.column_popcount(j);
            const std::size_t bc = bits_count(index, upds[j - 1]);
            if (pc != bc) {
              fail2 = where + ": column " + std::to_string(j) + " popcount " + std::to_string(pc) +
                      " != bits_count " + std::to_string(bc);
              break;
            }
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream summary;
  summary << instances << " instances, total K=" << total_k << ", " << elapsed << " s";
  Outcome c1{fail1.empty() ? Status::Pass : Status::Fail, fail1.empty() ? summary.str() : fail1};
  Outcome c2{fail2.empty() ? Status::Pass : Status::Fail,
             fail2.empty() ? "every column of " + std::to_string(instances) + " instances" : fail2};
  return {c1, c2};
}

Outcome two_dim_example() {
  const MatchInstance inst = fixtures::three_by_two_instance();
  IntersectionMatrix expected(3, 2);
  expected.set(1, 1);
  expected.set(2, 2);
  expected.set(3, 1);
  expected.set(3, 2);
  const std::vector<std::pair<std::string, Matcher1D>> matchers{
      {"bf", match_bf_1d},
      {"sbm", match_sbm_1d},
      {"gb", [](auto s, auto u) { return match_gb_1d(s, u, GridConfig(4, 0, 10)); }},
      {"itm", match_itm_1d},
      {"itm-par", [](auto s, auto u) { return match_itm_parallel(s, u, ParallelConfig(2)); }},
  };
  for (const auto& [name, fn] : matchers) {
    const IntersectionMatrix got = match_d(inst, fn);
    if (!(got == expected)) return {Status::Fail, name + " differs at " + describe_diff(expected, got)};
  }
  return {Status::Pass, "M = [[1,0],[0,1],[1,1]] from bf, sbm, gb, itm, itm-par"};
}

Outcome avl_suite() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coord(0, 999);
  std::uniform_int_distribution<int> len(1, 50);
  IntervalTree tree;
  std::vector<Interval1D> live;
  std::size_t next_id = 1;
  std::size_t inserts = 0;
  std::size_t erases = 0;
  for (int op = 0; op < 10000; ++op) {
    const bool insert = live.empty() || rng() % 5 < 3;
    if (insert) {
      const double lo = coord(rng);
      const Interval1D iv(lo, lo + len(rng), next_id++);
      tree.insert(iv);
      live.push_back(iv);
      ++inserts;
    } else {
      const std::size_t k = rng() % live.size();
      tree.erase(live[k]);
      live[k] = live.back();
      live.pop_back();
      ++erases;
    }
    const TreeDiagnostics diag = tree.validate();
    if (!diag) return {Status::Fail, "after operation " + std::to_string(op + 1) + ": " + diag.message};
    if (tree.size() != live.size()) return {Status::Fail, "size drift after operation " + std::to_string(op + 1)};
  }
  return {Status::Pass, std::to_string(inserts) + " inserts, " + std::to_string(erases) + " erases, final height " +
                            std::to_string(tree.height())};
}

Outcome dynamic_moves() {
  const double length = 1e6;
  const MatchInstance inst = generate_workload({500, 10, length, 1, 99});
  const auto t0 = Clock::now();
  DynamicMatcher dm(inst.subscription_projections(0), inst.update_projections(0));
  std::mt19937_64 rng(5);
  for (std::size_t move = 1; move <= 1000; ++move) {
    const bool update = rng() & 1;
    const std::size_t count = update ? dm.m() : dm.n();
    const std::size_t idx = 1 + rng() % count;
    const Interval1D& cur = update ? dm.updates()[idx - 1] : dm.subscriptions()[idx - 1];
    const double l = cur.high() - cur.low();
    const double lo = std::uniform_real_distribution<double>(0, length - l)(rng);
    if (update) {
      dm.move_update(idx, lo, lo + l);
    } else {
      dm.move_subscription(idx, lo, lo + l);
    }
    const IntersectionMatrix ref = match_bf_1d(dm.subscriptions(), dm.updates());
    if (!(dm.matrix() == ref)) {
      return {Status::Fail, "after move " + std::to_string(move) + " matrix differs at " +
                                describe_diff(ref, dm.matrix())};
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << "1000 moves, N=500, " << elapsed << " s";
  return {elapsed < 30 ? Status::Pass : Status::Fail, os.str() + (elapsed < 30 ? "" : " (limit 30 s)")};
}

BenchResult bench(Algo algo, std::size_t n, double alpha, std::size_t reps, std::size_t threads = 1) {
  BenchOptions opts;
  opts.workload = {n, alpha, 1e6, 1, 1};
  opts.algo = algo;
  opts.reps = reps;
  opts.threads = threads;
  return run_bench(opts);
}

Outcome sequential_ordering() {
  const BenchResult bf = bench(Algo::BruteForce, 100000, 1, 3);
  const BenchResult sbm = bench(Algo::SortBased, 100000, 1, 3);
  const BenchResult itm = bench(Algo::IntervalTree, 100000, 1, 3);
  const double r_sbm = bf.mean / sbm.mean;
  const double r_itm = bf.mean / itm.mean;
  std::ostringstream os;
  os << "bf " << bf.mean << " s, sbm " << sbm.mean << " s (" << r_sbm << "x), itm " << itm.mean << " s ("
     << r_itm << "x)";
  if (bf.K != sbm.K || bf.K != itm.K) return {Status::Fail, os.str() + "; K differs"};
  return {r_sbm >= 5 && r_itm >= 5 ? Status::Pass : Status::Fail, os.str()};
}

// Distinct (physical id, core id) pairs in /proc/cpuinfo, capped by the
// processors this process may run on.
std::size_t physical_cores() {
  std::ifstream in("/proc/cpuinfo");
  std::set<std::pair<std::string, std::string>> cores;
  std::string line;
  std::string phys = "0";
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : "";
    if (key == "physical id") phys = value;
    if (key == "core id") cores.emplace(phys, value);
  }
  const auto procs = static_cast<std::size_t>(omp_get_num_procs());
  if (cores.empty()) return std::max<std::size_t>(1, std::min<std::size_t>(procs, std::thread::hardware_concurrency()));
  return std::min(cores.size(), procs);
}

std::size_t available_memory_bytes() {
  std::ifstream in("/proc/meminfo");
  std::string key;
  std::size_t kb = 0;
  std::string unit;
  while (in >> key >> kb >> unit) {
    if (key == "MemAvailable:") return kb * 1024;
  }
  return static_cast<std::size_t>(sysconf(_SC_PHYS_PAGES)) * static_cast<std::size_t>(sysconf(_SC_PAGE_SIZE));
}

Outcome parallel_scalability() {
  // Determinism: parallel output is bit-identical to the serial reference
  // at every worker count.
  std::string det_fail;
  for (std::uint64_t seed = 1; seed <= 5 && det_fail.empty(); ++seed) {
    const MatchInstance inst = generate_workload({20000, 100, 1e6, 1, seed});
    const auto subs = inst.subscription_projections(0);
    const auto upds = inst.update_projections(0);
    const IntersectionMatrix ref = match_bf_1d(subs, upds);
    for (std::size_t p : {1u, 2u, 4u, 8u}) {
      const IntersectionMatrix itm = match_itm_parallel(subs, upds, ParallelConfig(p));
      const IntersectionMatrix bf = match_bf_parallel(subs, upds, ParallelConfig(p));
      if (!(itm == ref)) det_fail = "itm-par p=" + std::to_string(p) + " differs at " + describe_diff(ref, itm);
      if (!(bf == ref)) det_fail = "bf-par p=" + std::to_string(p) + " differs at " + describe_diff(ref, bf);
      if (!det_fail.empty()) break;
    }
  }
  if (!det_fail.empty()) return {Status::Fail, "determinism: " + det_fail};
  const std::string det = "determinism at p=1,2,4,8 holds";

  const std::size_t n = 500000;
  const std::size_t cores = physical_cores();
  const std::size_t matrix_bytes = (n / 2) * ((n / 2 + 63) / 64) * 8;
  const std::size_t avail = available_memory_bytes();
  if (cores < 4) {
    return {Status::Skip, "speedup needs >= 4 physical cores, found " + std::to_string(cores) + "; " + det};
  }
  if (avail < matrix_bytes + matrix_bytes / 4) {
    return {Status::Skip, "speedup needs ~" + std::to_string(matrix_bytes >> 20) + " MiB for the matrix, " +
                              std::to_string(avail >> 20) + " MiB available; " + det};
  }
  const BenchResult p1 = bench(Algo::IntervalTreeParallel, n, 100, 3, 1);
  const BenchResult p2 = bench(Algo::IntervalTreeParallel, n, 100, 3, 2);
  const BenchResult p4 = bench(Algo::IntervalTreeParallel, n, 100, 3, 4);
  const double s2 = p1.mean / p2.mean;
  const double s4 = p1.mean / p4.mean;
  std::ostringstream os;
  os << "S2=" << s2 << ", S4=" << s4 << "; " << det;
  return {s4 >= 2.0 && s4 >= s2 ? Status::Pass : Status::Fail, os.str()};
}

Outcome output_sensitivity() {
  std::vector<double> means;
  std::ostringstream os;
  for (double alpha : {0.01, 1.0, 100.0}) {
    const BenchResult r = bench(Algo::IntervalTree, 200000, alpha, 3);
    means.push_back(r.mean);
    os << (means.size() > 1 ? ", " : "") << "alpha=" << alpha << ": " << r.mean << " s (K=" << r.K << ")";
  }
  const bool ok = std::is_sorted(means.begin(), means.end());
  return {ok ? Status::Pass : Status::Fail, os.str()};
}

const char* label(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skip:
      return "SKIP";
  }
  return "?";
}

}  // namespace

int main() {
  bool failed = false;
  auto report = [&failed](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d %-28s %s  %s\n", id, name, label(o.status), o.detail.c_str());
    std::fflush(stdout);
    failed = failed || o.status == Status::Fail;
  };
  auto guarded = [](const std::function<Outcome()>& fn) -> Outcome {
    try {
      return fn();
    } catch (const std::exception& e) {
      return {Status::Fail, std::string("exception: ") + e.what()};
    }
  };

  std::pair<Outcome, Outcome> c12{{Status::Fail, ""}, {Status::Fail, ""}};
  try {
    c12 = oracle_equivalence();
  } catch (const std::exception& e) {
    c12 = {{Status::Fail, e.what()}, {Status::Fail, e.what()}};
  }
  report(1, "oracle-equivalence", c12.first);
  report(2, "counting-oracle", c12.second);
  report(3, "two-dim-example", guarded(two_dim_example));
  report(4, "avl-structure", guarded(avl_suite));
  report(5, "dynamic-maintenance", guarded(dynamic_moves));
  report(6, "sequential-ordering", guarded(sequential_ordering));
  report(7, "parallel-scalability", guarded(parallel_scalability));
  report(8, "itm-output-sensitivity", guarded(output_sensitivity));
  return failed ? 1 : 0;
}
