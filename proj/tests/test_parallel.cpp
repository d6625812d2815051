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

#include <random>

#include "ddm/matchers.hpp"
#include "ddm/parallel.hpp"
#include "ddm/workload.hpp"
#include "doctest.h"

using namespace ddm;

namespace {
struct Sets {
  std::vector<Interval1D> subs, upds;
};
Sets workload(std::size_t n, double alpha, std::uint64_t seed) {
  const MatchInstance inst = generate_workload({n, alpha, 1e6, 1, seed});
  return {inst.subscription_projections(0), inst.update_projections(0)};
}
}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("worker count must be positive") {
    CHECK_THROWS_AS(ParallelConfig(0), std::invalid_argument);
    CHECK(ParallelConfig::hardware().workers() >= 1);
  }

  TEST_CASE("chunks partition the columns contiguously") {
    for (std::size_t m : {0u, 1u, 7u, 64u, 1001u}) {
      for (std::size_t p : {1u, 2u, 3u, 8u, 2000u}) {
        const auto chunks = partition_columns(m, p);
        REQUIRE(chunks.size() == p);
        std::size_t expect_begin = 0;
        std::size_t smallest = m, largest = 0;
        for (const auto& [b, e] : chunks) {
          REQUIRE(b == expect_begin);
          REQUIRE(b <= e);
          smallest = std::min(smallest, e - b);
          largest = std::max(largest, e - b);
          expect_begin = e;
        }
        REQUIRE(expect_begin == m);
        REQUIRE(largest - smallest <= 1);
      }
    }
  }

  TEST_CASE("parallel ITM is independent of the worker count") {
    const auto [subs, upds] = workload(2000, 100, 9);
    const auto sequential = match_itm_1d(subs, upds);
    CHECK(match_itm_parallel(subs, upds, ParallelConfig(1)) == sequential);
    for (std::size_t p : {2u, 3u, 8u}) CHECK(match_itm_parallel(subs, upds, ParallelConfig(p)) == sequential);
  }

  TEST_CASE("parallel BF equals sequential BF") {
    const auto [subs, upds] = workload(2000, 1, 10);
    const auto sequential = match_bf_1d(subs, upds);
    CHECK(match_bf_parallel(subs, upds, ParallelConfig(1)) == sequential);
    CHECK(match_bf_parallel(subs, upds, ParallelConfig(4)) == sequential);
  }

  TEST_CASE("more workers than columns") {
    const auto [subs, upds] = workload(6, 2, 11);
    CHECK(match_bf_parallel(subs, upds, ParallelConfig(16)) == match_bf_1d(subs, upds));
    CHECK(match_itm_parallel(subs, upds, ParallelConfig(16)) == match_itm_1d(subs, upds));
  }

  TEST_CASE("no updates") {
    const auto [subs, upds] = workload(200, 1, 12);
    const auto m = match_itm_parallel(subs, std::span<const Interval1D>{}, ParallelConfig(8));
    CHECK(m.rows() == subs.size());
    CHECK(m.cols() == 0);
    CHECK(match_bf_parallel(subs, std::span<const Interval1D>{}, ParallelConfig(8)).cols() == 0);
  }

  TEST_CASE("queries leave a shared tree untouched") {
    const auto [subs, upds] = workload(4000, 100, 13);
    const IntervalTree tree = it_build(subs);
    const auto m = match_itm_parallel(tree, upds, ParallelConfig(8));
    CHECK(m == match_itm_1d(subs, upds));
    CHECK(tree.validate());
    CHECK(tree.size() == subs.size());
  }
}
