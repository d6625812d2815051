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
#include <memory>
#include <span>
#include <string>

#include "ddm/core.hpp"

namespace ddm {

// Node of an AVL tree keyed by (low, high, id). maxupper and minlower
// summarize the whole subtree rooted here and drive query pruning.
struct ITNode {
  explicit ITNode(const Interval1D& iv) : in(iv), maxupper(iv.high()), minlower(iv.low()) {}

  Interval1D in;
  std::unique_ptr<ITNode> left;
  std::unique_ptr<ITNode> right;
  int height = 1;
  double maxupper;
  double minlower;
};

struct TreeDiagnostics {
  bool ok = true;
  std::string message;  // first violation found, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

template <bool CountVisits, class Sink>
void query_node(const ITNode* x, const Interval1D& q, Sink& sink, std::size_t& visited) {
  if (x == nullptr) return;
  if constexpr (CountVisits) ++visited;
  if (x->maxupper < q.low() || x->minlower > q.high()) return;
  query_node<CountVisits>(x->left.get(), q, sink, visited);
  if (intersect_1d(x->in, q)) sink(x->in);
  // Everything to the right starts at or after x->in.low().
  if (q.high() > x->in.low()) query_node<CountVisits>(x->right.get(), q, sink, visited);
}

}  // namespace detail

/// Calls sink(interval) once per interval in the subtree at x that intersects
/// q, in key order. Returns the number of nodes examined.
template <class Sink>
std::size_t query_subtree(const ITNode* x, const Interval1D& q, Sink&& sink) {
  std::size_t visited = 0;
  detail::query_node<true>(x, q, sink, visited);
  return visited;
}

// Interval tree backed by an augmented AVL tree, one node per stored
// interval. Duplicates are allowed as long as ids differ.
//
// Concurrent const queries are safe; mutation needs exclusive access.
class IntervalTree {
 public:
  IntervalTree() = default;
  /// Sorts by key and links medians into a balanced tree; O(n log n).
  explicit IntervalTree(std::span<const Interval1D> intervals);

  IntervalTree(IntervalTree&&) noexcept = default;
  IntervalTree& operator=(IntervalTree&&) noexcept = default;

  void insert(const Interval1D& iv);
  /// Removes the interval with the same (low, high, id) key.
  /// Throws std::out_of_range if no such interval is stored.
  void erase(const Interval1D& iv);
  bool contains(const Interval1D& iv) const noexcept;

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  int height() const noexcept { return root_ ? root_->height : 0; }
  const ITNode* root() const noexcept { return root_.get(); }

  template <class Sink>
  void query(const Interval1D& q, Sink&& sink) const {
    std::size_t unused = 0;
    detail::query_node<false>(root_.get(), q, sink, unused);
  }

  /// Recomputes height, balance, key order and both aggregates for every node.
  TreeDiagnostics validate() const;

  /// Indented in-order dump: key, maxupper, minlower, height.
  void dump(std::ostream& out) const;

 private:
  friend struct IntervalTreeTestAccess;

  std::unique_ptr<ITNode> root_;
  std::size_t size_ = 0;
};

/// Builds a tree holding all of `intervals`.
IntervalTree it_build(std::span<const Interval1D> intervals);

/// Strict (low, high, id) ordering used as the tree key.
bool key_less(const Interval1D& a, const Interval1D& b) noexcept;

}  // namespace ddm
