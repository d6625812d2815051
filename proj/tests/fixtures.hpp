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

#include <vector>

#include "ddm/core.hpp"

namespace fixtures {

// Two-dimensional layout with three subscriptions and two updates where
// U1 meets S1 and S3, U2 meets S2 and S3, and S1/U2 overlap on the first
// axis only. Expected matrix: [[1,0],[0,1],[1,1]].
inline ddm::MatchInstance three_by_two_instance() {
  using ddm::Extent;
  using ddm::ExtentKind;
  std::vector<Extent> subs{
      Extent(1, ExtentKind::Subscription, {{0, 4}, {6, 10}}),
      Extent(2, ExtentKind::Subscription, {{6, 10}, {0, 4}}),
      Extent(3, ExtentKind::Subscription, {{3, 7}, {3, 7}}),
  };
  std::vector<Extent> upds{
      Extent(1, ExtentKind::Update, {{1, 5}, {5, 8}}),
      Extent(2, ExtentKind::Update, {{2, 9}, {1, 3.5}}),
  };
  return ddm::MatchInstance(std::move(subs), std::move(upds), 2);
}

}  // namespace fixtures
