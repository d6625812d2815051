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

#include "ddm/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ddm/dynamic.hpp"
#include "ddm/matchers.hpp"
#include "ddm/parallel.hpp"

namespace ddm {

namespace {

std::string describe_difference(const IntersectionMatrix& expected, const IntersectionMatrix& actual,
                                const std::string& expected_name, const std::string& actual_name) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    return "MISMATCH: " + actual_name + " returned a " + std::to_string(actual.rows()) + "x" +
           std::to_string(actual.cols()) + " matrix, " + expected_name + " " + std::to_string(expected.rows()) +
           "x" + std::to_string(expected.cols());
  }
  const auto diff = first_difference(expected, actual);
  if (!diff) return {};
  const auto [i, j] = *diff;
  return "MISMATCH: " + actual_name + " differs from " + expected_name + " at (" + std::to_string(i) + "," +
         std::to_string(j) + "): expected " + std::to_string(expected.get(i, j)) + ", got " +
         std::to_string(actual.get(i, j));
}

VerifyReport fail(std::string message) { return VerifyReport{false, 0, std::move(message)}; }

}  // namespace

std::vector<NamedMatcher> default_matchers(double space_length, std::span<const std::size_t> grid_sizes,
                                           std::span<const std::size_t> worker_counts) {
  std::vector<NamedMatcher> out;
  out.push_back({"bf", "bf", match_bf_1d});
  out.push_back({"sbm", "sbm", match_sbm_1d});
  for (std::size_t g : grid_sizes) {
    const GridConfig grid(g, 0.0, space_length);
    out.push_back({"gb", "gb G=" + std::to_string(g),
                   [grid](std::span<const Interval1D> s, std::span<const Interval1D> u) {
                     return match_gb_1d(s, u, grid);
                   }});
  }
  out.push_back({"itm", "itm", match_itm_1d});
  for (std::size_t p : worker_counts) {
    const ParallelConfig cfg(p);
    out.push_back({"itm", "itm-par p=" + std::to_string(p),
                   [cfg](std::span<const Interval1D> s, std::span<const Interval1D> u) {
                     return match_itm_parallel(s, u, cfg);
                   }});
    out.push_back({"bf", "bf-par p=" + std::to_string(p),
                   [cfg](std::span<const Interval1D> s, std::span<const Interval1D> u) {
                     return match_bf_parallel(s, u, cfg);
                   }});
  }
  return out;
}

VerifyReport verify_instance(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                             std::span<const NamedMatcher> matchers, const DynamicAudit& audit) {
  if (matchers.empty()) return fail("no matchers to compare");
  const IntersectionMatrix reference = matchers.front().fn(subs, upds);
  std::set<std::string> algorithms{matchers.front().algorithm};
  for (const NamedMatcher& m : matchers.subspan(1)) {
    const IntersectionMatrix result = m.fn(subs, upds);
    if (std::string msg = describe_difference(reference, result, matchers.front().label, m.label); !msg.empty()) {
      return fail(std::move(msg));
    }
    algorithms.insert(m.algorithm);
  }

  const BitsIndex counter(subs);
  for (std::size_t j = 1; j <= upds.size(); ++j) {
    const std::size_t expected = counter.count(upds[j - 1]);
    const std::size_t actual = reference.column_popcount(j);
    if (expected != actual) {
      return fail("MISMATCH: column " + std::to_string(j) + " has " + std::to_string(actual) +
                  " bits, BITS count is " + std::to_string(expected));
    }
  }

  if (audit.moves > 0) {
    VerifyReport dyn = audit_dynamic(subs, upds, audit);
    if (!dyn.ok) return dyn;
  }

  VerifyReport report;
  report.K = reference.popcount();
  report.message =
      "OK: " + std::to_string(algorithms.size()) + " algorithms agree, K=" + std::to_string(report.K);
  return report;
}

VerifyReport verify(const WorkloadSpec& spec, std::size_t seeds, std::span<const NamedMatcher> matchers,
                    std::size_t dynamic_moves) {
  VerifyReport last;
  for (std::size_t s = 0; s < seeds; ++s) {
    WorkloadSpec one = spec;
    one.seed = rep_seed(spec.seed, s);
    const MatchInstance inst = generate_workload(one);
    DynamicAudit audit{dynamic_moves, 1, spec.length, one.seed};
    last = verify_instance(inst.subscription_projections(0), inst.update_projections(0), matchers, audit);
    if (!last.ok) {
      last.message = "seed " + std::to_string(one.seed) + ": " + last.message;
      return last;
    }
  }
  return last;
}

VerifyReport audit_dynamic(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                           const DynamicAudit& audit) {
  DynamicMatcher dm(subs, upds);
  auto check = [&](std::size_t step) -> VerifyReport {
    const IntersectionMatrix expected = match_bf_1d(dm.subscriptions(), dm.updates());
    const std::string where = step == 0 ? std::string("after build") : "after move " + std::to_string(step);
    if (std::string msg = describe_difference(expected, dm.matrix(), "bf", "dynamic"); !msg.empty()) {
      return fail(msg + " " + where);
    }
    if (auto diag = dm.subscription_tree().validate(); !diag) {
      return fail("subscription tree invalid " + where + ": " + diag.message);
    }
    if (auto diag = dm.update_tree().validate(); !diag) {
      return fail("update tree invalid " + where + ": " + diag.message);
    }
    return VerifyReport{true, dm.matrix().popcount(), {}};
  };

  if (VerifyReport r = check(0); !r.ok) return r;
  if (dm.n() + dm.m() == 0) return VerifyReport{true, 0, "OK: 0 moves"};

  const std::size_t every = std::max<std::size_t>(audit.audit_every, 1);
  std::mt19937_64 rng(audit.seed);
  std::size_t audits = 1;
  for (std::size_t step = 1; step <= audit.moves; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, dm.n() + dm.m() - 1);
    const std::size_t k = pick(rng);
    const bool is_sub = k < dm.n();
    const Interval1D& cur = is_sub ? dm.subscriptions()[k] : dm.updates()[k - dm.n()];
    const double len = std::min(cur.high() - cur.low(), audit.space_length);
    const double max_low = audit.space_length - len;
    double low = max_low > 0 ? std::uniform_real_distribution<double>(0.0, max_low)(rng) : 0.0;
    double high = std::min(low + len, audit.space_length);
    if (!(low < high)) {
      low = cur.low();
      high = cur.high();
    }
    if (is_sub) {
      dm.move_subscription(k + 1, low, high);
    } else {
      dm.move_update(k - dm.n() + 1, low, high);
    }
    if (step % every == 0 || step == audit.moves) {
      if (VerifyReport r = check(step); !r.ok) return r;
      ++audits;
    }
  }
  return VerifyReport{true, dm.matrix().popcount(),
                      "OK: " + std::to_string(audit.moves) + " moves, " + std::to_string(audits) +
                          " audits, K=" + std::to_string(dm.matrix().popcount())};
}

}  // namespace ddm
