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

// Serial matchers against their OpenMP counterparts on one fixed workload
// per size. Threads come from the second range argument.

#include <benchmark/benchmark.h>

#include "ddm/matchers.hpp"
#include "ddm/parallel.hpp"
#include "ddm/workload.hpp"

namespace {

struct Projections {
  std::vector<ddm::Interval1D> subs;
  std::vector<ddm::Interval1D> upds;
};

Projections make(std::size_t n, double alpha) {
  const ddm::MatchInstance inst = ddm::generate_workload({n, alpha, 1e6, 1, 1});
  return {inst.subscription_projections(0), inst.update_projections(0)};
}

void report(benchmark::State& state, const ddm::IntersectionMatrix& m) {
  state.counters["K"] = static_cast<double>(m.popcount());
  state.counters["pairs/s"] =
      benchmark::Counter(static_cast<double>(m.rows() * m.cols()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_bf_serial(benchmark::State& state) {
  const Projections w = make(static_cast<std::size_t>(state.range(0)), 1);
  ddm::IntersectionMatrix m;
  for (auto _ : state) {
    m = ddm::match_bf_1d(w.subs, w.upds);
    benchmark::DoNotOptimize(m);
  }
  report(state, m);
}

void BM_bf_parallel(benchmark::State& state) {
  const Projections w = make(static_cast<std::size_t>(state.range(0)), 1);
  const ddm::ParallelConfig cfg(static_cast<std::size_t>(state.range(1)));
  ddm::IntersectionMatrix m;
  for (auto _ : state) {
    m = ddm::match_bf_parallel(w.subs, w.upds, cfg);
    benchmark::DoNotOptimize(m);
  }
  report(state, m);
}

void BM_itm_serial(benchmark::State& state) {
  const Projections w = make(static_cast<std::size_t>(state.range(0)), 100);
  ddm::IntersectionMatrix m;
  for (auto _ : state) {
    m = ddm::match_itm_1d(w.subs, w.upds);
    benchmark::DoNotOptimize(m);
  }
  report(state, m);
}

void BM_itm_parallel(benchmark::State& state) {
  const Projections w = make(static_cast<std::size_t>(state.range(0)), 100);
  const ddm::ParallelConfig cfg(static_cast<std::size_t>(state.range(1)));
  ddm::IntersectionMatrix m;
  for (auto _ : state) {
    m = ddm::match_itm_parallel(w.subs, w.upds, cfg);
    benchmark::DoNotOptimize(m);
  }
  report(state, m);
}

void BM_sbm_serial(benchmark::State& state) {
  const Projections w = make(static_cast<std::size_t>(state.range(0)), 100);
  ddm::IntersectionMatrix m;
  for (auto _ : state) {
    m = ddm::match_sbm_1d(w.subs, w.upds);
    benchmark::DoNotOptimize(m);
  }
  report(state, m);
}

}  // namespace

BENCHMARK(BM_bf_serial)->Arg(10000)->Arg(40000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bf_parallel)->ArgsProduct({{10000, 40000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_itm_serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_itm_parallel)->ArgsProduct({{10000, 100000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sbm_serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
