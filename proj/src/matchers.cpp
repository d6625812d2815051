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

#include "ddm/matchers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#if defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>
#endif

#include "ddm/interval_tree.hpp"
#include "ddm/kernels.hpp"

namespace ddm {

namespace kernels {

BoundsSoA::BoundsSoA(std::span<const Interval1D> intervals) {
  lows.reserve(intervals.size());
  highs.reserve(intervals.size());
  for (const Interval1D& iv : intervals) {
    lows.push_back(iv.low());
    highs.push_back(iv.high());
  }
}

namespace {

using ColumnKernel = void (*)(const double*, const double*, std::size_t, double, double, Word*) noexcept;

// Sets bit b of out[w] iff lows[64w+b] < qhi and qlo < highs[64w+b]; writes
// every word, including the partial last one.
void scan_scalar(const double* lows, const double* highs, std::size_t n, double qlo, double qhi,
                 Word* out) noexcept {
  for (std::size_t base = 0, w = 0; base < n; base += kWordBits, ++w) {
    const std::size_t len = std::min(kWordBits, n - base);
    Word bits = 0;
    for (std::size_t b = 0; b < len; ++b) {
      bits |= static_cast<Word>((lows[base + b] < qhi) & (qlo < highs[base + b])) << b;
    }
    out[w] = bits;
  }
}

#if defined(__x86_64__) && defined(__GNUC__)

void scan_sse2(const double* lows, const double* highs, std::size_t n, double qlo, double qhi,
               Word* out) noexcept {
  const __m128d vqlo = _mm_set1_pd(qlo);
  const __m128d vqhi = _mm_set1_pd(qhi);
  const std::size_t full = n / kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    const double* lo = lows + w * kWordBits;
    const double* hi = highs + w * kWordBits;
    Word bits = 0;
    for (std::size_t b = 0; b < kWordBits; b += 2) {
      const __m128d hit = _mm_and_pd(_mm_cmplt_pd(_mm_loadu_pd(lo + b), vqhi), _mm_cmplt_pd(vqlo, _mm_loadu_pd(hi + b)));
      bits |= static_cast<Word>(_mm_movemask_pd(hit)) << b;
    }
    out[w] = bits;
  }
  if (full * kWordBits < n) {
    scan_scalar(lows + full * kWordBits, highs + full * kWordBits, n - full * kWordBits, qlo, qhi, out + full);
  }
}

__attribute__((target("avx2"))) void scan_avx2(const double* lows, const double* highs, std::size_t n, double qlo,
                                               double qhi, Word* out) noexcept {
  const __m256d vqlo = _mm256_set1_pd(qlo);
  const __m256d vqhi = _mm256_set1_pd(qhi);
  const std::size_t full = n / kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    const double* lo = lows + w * kWordBits;
    const double* hi = highs + w * kWordBits;
    Word bits = 0;
    for (std::size_t b = 0; b < kWordBits; b += 4) {
      const __m256d hit = _mm256_and_pd(_mm256_cmp_pd(_mm256_loadu_pd(lo + b), vqhi, _CMP_LT_OQ),
                                        _mm256_cmp_pd(vqlo, _mm256_loadu_pd(hi + b), _CMP_LT_OQ));
      bits |= static_cast<Word>(_mm256_movemask_pd(hit)) << b;
    }
    out[w] = bits;
  }
  if (full * kWordBits < n) {
    scan_scalar(lows + full * kWordBits, highs + full * kWordBits, n - full * kWordBits, qlo, qhi, out + full);
  }
}

ColumnKernel pick_kernel() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? scan_avx2 : scan_sse2;
}

#else

ColumnKernel pick_kernel() noexcept { return scan_scalar; }

#endif

const ColumnKernel kScan = pick_kernel();

}  // namespace

void bf_column(const BoundsSoA& subs, const Interval1D& q, std::span<Word> col) noexcept {
  kScan(subs.lows.data(), subs.highs.data(), subs.lows.size(), q.low(), q.high(), col.data());
}

void bf_column_scalar(const BoundsSoA& subs, const Interval1D& q, std::span<Word> col) noexcept {
  scan_scalar(subs.lows.data(), subs.highs.data(), subs.lows.size(), q.low(), q.high(), col.data());
}

}  // namespace kernels

IntersectionMatrix match_bf_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds) {
  IntersectionMatrix matrix(subs.size(), upds.size());
  const kernels::BoundsSoA bounds(subs);
  for (std::size_t j = 1; j <= upds.size(); ++j) {
    kernels::bf_column(bounds, upds[j - 1], matrix.column(j));
  }
  return matrix;
}

std::vector<SbmEndpoint> sbm_endpoints(std::span<const Interval1D> subs, std::span<const Interval1D> upds) {
  std::vector<SbmEndpoint> points;
  points.reserve(2 * (subs.size() + upds.size()));
  for (const Interval1D& s : subs) {
    points.push_back({s.low(), false, ExtentKind::Subscription, s.id()});
    points.push_back({s.high(), true, ExtentKind::Subscription, s.id()});
  }
  for (const Interval1D& u : upds) {
    points.push_back({u.low(), false, ExtentKind::Update, u.id()});
    points.push_back({u.high(), true, ExtentKind::Update, u.id()});
  }
  std::sort(points.begin(), points.end(), [](const SbmEndpoint& a, const SbmEndpoint& b) {
    return std::tuple(a.x, !a.upper, a.kind, a.id) < std::tuple(b.x, !b.upper, b.kind, b.id);
  });
  return points;
}

IntersectionMatrix match_sbm_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds) {
  IntersectionMatrix matrix(subs.size(), upds.size());
  BitVector active_subs(subs.size());
  BitVector active_upds(upds.size());
  for (const SbmEndpoint& p : sbm_endpoints(subs, upds)) {
    if (p.kind == ExtentKind::Subscription) {
      if (!p.upper) {
        active_subs.set(p.id - 1);
      } else {
        active_subs.reset(p.id - 1);
        matrix.or_row(p.id, active_upds);
      }
    } else {
      if (!p.upper) {
        active_upds.set(p.id - 1);
      } else {
        active_upds.reset(p.id - 1);
        matrix.or_column(p.id, active_subs);
      }
    }
  }
  return matrix;
}

GridConfig::GridConfig(std::size_t cells, double lo, double hi)
    : cells_(cells), lo_(lo), hi_(hi), width_((hi - lo) / static_cast<double>(cells)) {
  if (cells == 0) throw std::invalid_argument("grid needs at least one cell");
  if (!(lo < hi)) throw std::invalid_argument("grid span must satisfy lo < hi");
}

std::size_t GridConfig::cell_of(double x) const noexcept {
  const double t = std::floor((x - lo_) / width_);
  if (!(t > 0)) return 0;
  const auto c = static_cast<std::size_t>(t);
  return std::min(c, cells_ - 1);
}

std::pair<std::size_t, std::size_t> GridConfig::cell_range(const Interval1D& iv) const noexcept {
  return {cell_of(iv.low()), cell_of(iv.high())};
}

namespace {

// Interval indices bucketed by cell, stored as one flat array per set.
struct CellIndex {
  std::vector<std::size_t> offsets;  // cells + 1 entries
  std::vector<std::size_t> members;  // 0-based positions into the input span
};

CellIndex bucket(std::span<const Interval1D> intervals, const GridConfig& cfg) {
  CellIndex idx;
  idx.offsets.assign(cfg.cells() + 1, 0);
  for (const Interval1D& iv : intervals) {
    auto [first, last] = cfg.cell_range(iv);
    for (std::size_t c = first; c <= last; ++c) ++idx.offsets[c + 1];
  }
  for (std::size_t c = 0; c < cfg.cells(); ++c) idx.offsets[c + 1] += idx.offsets[c];
  idx.members.resize(idx.offsets.back());
  std::vector<std::size_t> fill(idx.offsets.begin(), idx.offsets.end() - 1);
  for (std::size_t pos = 0; pos < intervals.size(); ++pos) {
    auto [first, last] = cfg.cell_range(intervals[pos]);
    for (std::size_t c = first; c <= last; ++c) idx.members[fill[c]++] = pos;
  }
  return idx;
}

void check_inside(std::span<const Interval1D> intervals, const GridConfig& cfg, const char* what) {
  for (const Interval1D& iv : intervals) {
    if (iv.low() < cfg.lo() || iv.high() > cfg.hi()) {
      throw std::invalid_argument(std::string(what) + " extent " + std::to_string(iv.id()) +
                                  " lies outside the grid span");
    }
  }
}

}  // namespace

IntersectionMatrix match_gb_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds,
                               const GridConfig& cfg) {
  check_inside(subs, cfg, "subscription");
  check_inside(upds, cfg, "update");
  IntersectionMatrix matrix(subs.size(), upds.size());
  const CellIndex sub_cells = bucket(subs, cfg);
  const CellIndex upd_cells = bucket(upds, cfg);

  kernels::BoundsSoA cell;
  std::vector<std::size_t> ids;
  std::vector<Word> hits;
  for (std::size_t c = 0; c < cfg.cells(); ++c) {
    const std::size_t s_begin = sub_cells.offsets[c];
    const std::size_t s_end = sub_cells.offsets[c + 1];
    const std::size_t u_begin = upd_cells.offsets[c];
    const std::size_t u_end = upd_cells.offsets[c + 1];
    if (s_begin == s_end || u_begin == u_end) continue;

    cell.lows.clear();
    cell.highs.clear();
    ids.clear();
    for (std::size_t k = s_begin; k < s_end; ++k) {
      const Interval1D& s = subs[sub_cells.members[k]];
      cell.lows.push_back(s.low());
      cell.highs.push_back(s.high());
      ids.push_back(s.id() - 1);
    }
    hits.resize((ids.size() + kWordBits - 1) / kWordBits);
    // Brute force restricted to the cell, then scatter the cell-local hits
    // to matrix rows. A pair filed under several cells is found once per
    // shared cell; setting a bit twice is harmless.
    for (std::size_t k = u_begin; k < u_end; ++k) {
      const Interval1D& u = upds[upd_cells.members[k]];
      kernels::bf_column(cell, u, hits);
      Word* col = matrix.column(u.id()).data();
      for (std::size_t w = 0; w < hits.size(); ++w) {
        for (Word bits = hits[w]; bits != 0; bits &= bits - 1) {
          const std::size_t i = ids[w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))];
          col[i / kWordBits] |= Word{1} << (i % kWordBits);
        }
      }
    }
  }
  return matrix;
}

IntersectionMatrix match_itm_1d(std::span<const Interval1D> subs, std::span<const Interval1D> upds) {
  IntersectionMatrix matrix(subs.size(), upds.size());
  const IntervalTree tree = it_build(subs);
  for (std::size_t j = 1; j <= upds.size(); ++j) {
    kernels::itm_column(tree, upds[j - 1], matrix.column(j));
  }
  return matrix;
}

BitsIndex::BitsIndex(std::span<const Interval1D> intervals) {
  starts_.reserve(intervals.size());
  ends_.reserve(intervals.size());
  for (const Interval1D& iv : intervals) {
    starts_.push_back(iv.low());
    ends_.push_back(iv.high());
  }
  std::sort(starts_.begin(), starts_.end());
  std::sort(ends_.begin(), ends_.end());
}

std::size_t BitsIndex::count(const Interval1D& q) const noexcept {
  const auto ending_before =
      static_cast<std::size_t>(std::upper_bound(ends_.begin(), ends_.end(), q.low()) - ends_.begin());
  const auto starting_after =
      static_cast<std::size_t>(starts_.end() - std::lower_bound(starts_.begin(), starts_.end(), q.high()));
  return starts_.size() - ending_before - starting_after;
}

}  // namespace ddm
