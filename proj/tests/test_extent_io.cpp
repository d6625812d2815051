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

#include <sstream>

#include "ddm/extent_io.hpp"
#include "ddm/matchers.hpp"
#include "ddm/workload.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ddm;

TEST_SUITE("extent_io") {
  TEST_CASE("extent file round-trips exactly") {
    for (std::size_t d : {1u, 3u}) {
      const MatchInstance inst = generate_workload({200, 1.0, 1e6, d, 17});
      std::stringstream ss;
      write_extents(ss, inst);
      const MatchInstance back = read_extents(ss);
      CHECK(back.dims() == d);
      CHECK(back.subscriptions() == inst.subscriptions());
      CHECK(back.updates() == inst.updates());
    }
  }

  TEST_CASE("extent file layout") {
    std::stringstream ss;
    write_extents(ss, fixtures::three_by_two_instance());
    CHECK(ss.str() ==
          "# d=2\n"
          "1,S,0,4,6,10\n"
          "2,S,6,10,0,4\n"
          "3,S,3,7,3,7\n"
          "1,U,1,5,5,8\n"
          "2,U,2,9,1,3.5\n");
  }

  TEST_CASE("reader accepts interleaved kinds and blank lines") {
    std::istringstream in("# d=1\n\n2,U,3,4\n1,S,0,1\n1,U,0.5,2\n# note\n");
    const MatchInstance inst = read_extents(in);
    CHECK(inst.n() == 1);
    CHECK(inst.m() == 2);
    CHECK(inst.updates()[1].proj(0).low() == 3);
  }

  TEST_CASE("reader errors") {
    auto parse = [](const std::string& text) {
      std::istringstream in(text);
      return read_extents(in);
    };
    CHECK_THROWS_WITH_AS(parse("1,S,0,1\n"), doctest::Contains("header"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse("# d=1\n1,X,0,1\n"), doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_AS(parse("# d=2\n1,S,0,1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("# d=1\n1,S,1,1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("# d=1\n1,S,0,abc\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("# d=1\n2,S,0,1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("# d=1\n1,S,0,1\n1,S,0,2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse(""), std::runtime_error);
  }

  TEST_CASE("matrix serialization") {
    const MatchInstance inst = fixtures::three_by_two_instance();
    const IntersectionMatrix m = match_d(inst, match_bf_1d);
    std::stringstream ss;
    write_matrix(ss, m);
    CHECK(ss.str() == "3 2 4\n1,1\n2,2\n3,1\n3,2\n");
    CHECK(read_matrix(ss) == m);

    std::istringstream bad("2 2 2\n1,1\n");
    CHECK_THROWS_AS(read_matrix(bad), std::runtime_error);
    std::istringstream outside("2 2 1\n3,1\n");
    CHECK_THROWS_AS(read_matrix(outside), std::out_of_range);
  }

  TEST_CASE("file helpers report unwritable paths") {
    CHECK_THROWS_AS(write_extents_file("/nonexistent-dir/x.txt", fixtures::three_by_two_instance()), std::runtime_error);
    CHECK_THROWS_AS(read_extents_file("/nonexistent-dir/x.txt"), std::runtime_error);
  }
}
