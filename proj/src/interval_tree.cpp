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

#include "ddm/interval_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ddm {

namespace {

using NodePtr = std::unique_ptr<ITNode>;

int height_of(const NodePtr& p) noexcept { return p ? p->height : 0; }

void refresh(ITNode& x) noexcept {
  x.height = 1 + std::max(height_of(x.left), height_of(x.right));
  x.maxupper = x.in.high();
  x.minlower = x.in.low();
  for (const NodePtr* child : {&x.left, &x.right}) {
    if (*child) {
      x.maxupper = std::max(x.maxupper, (*child)->maxupper);
      x.minlower = std::min(x.minlower, (*child)->minlower);
    }
  }
}

NodePtr rotate_right(NodePtr x) {
  NodePtr y = std::move(x->left);
  x->left = std::move(y->right);
  refresh(*x);
  y->right = std::move(x);
  refresh(*y);
  return y;
}

NodePtr rotate_left(NodePtr x) {
  NodePtr y = std::move(x->right);
  x->right = std::move(y->left);
  refresh(*x);
  y->left = std::move(x);
  refresh(*y);
  return y;
}

NodePtr rebalance(NodePtr x) {
  refresh(*x);
  const int balance = height_of(x->left) - height_of(x->right);
  if (balance > 1) {
    if (height_of(x->left->left) < height_of(x->left->right)) x->left = rotate_left(std::move(x->left));
    return rotate_right(std::move(x));
  }
  if (balance < -1) {
    if (height_of(x->right->right) < height_of(x->right->left)) x->right = rotate_right(std::move(x->right));
    return rotate_left(std::move(x));
  }
  return x;
}

NodePtr insert_node(NodePtr x, const Interval1D& iv) {
  if (!x) return std::make_unique<ITNode>(iv);
  if (key_less(iv, x->in)) {
    x->left = insert_node(std::move(x->left), iv);
  } else {
    x->right = insert_node(std::move(x->right), iv);
  }
  return rebalance(std::move(x));
}

NodePtr detach_min(NodePtr x, NodePtr& min_out) {
  if (!x->left) {
    NodePtr rest = std::move(x->right);
    min_out = std::move(x);
    return rest;
  }
  x->left = detach_min(std::move(x->left), min_out);
  return rebalance(std::move(x));
}

NodePtr erase_node(NodePtr x, const Interval1D& iv, bool& found) {
  if (!x) return x;
  if (key_less(iv, x->in)) {
    x->left = erase_node(std::move(x->left), iv, found);
  } else if (key_less(x->in, iv)) {
    x->right = erase_node(std::move(x->right), iv, found);
  } else {
    found = true;
    if (!x->left) return std::move(x->right);
    if (!x->right) return std::move(x->left);
    NodePtr successor;
    NodePtr rest = detach_min(std::move(x->right), successor);
    successor->left = std::move(x->left);
    successor->right = std::move(rest);
    x = std::move(successor);
  }
  return rebalance(std::move(x));
}

// Median-rooted tree over key-sorted input. Subtree sizes differ by at most
// one at every node, so the AVL balance condition holds. Nodes are allocated
// in in-order sequence, which keeps neighbouring subtrees close in memory.
NodePtr build_sorted(std::span<const Interval1D> sorted) {
  if (sorted.empty()) return nullptr;
  const std::size_t mid = sorted.size() / 2;
  NodePtr left = build_sorted(sorted.first(mid));
  auto x = std::make_unique<ITNode>(sorted[mid]);
  x->left = std::move(left);
  x->right = build_sorted(sorted.subspan(mid + 1));
  refresh(*x);
  return x;
}

std::string describe(const Interval1D& iv) {
  std::ostringstream os;
  os << "[" << iv.low() << "," << iv.high() << ")#" << iv.id();
  return os.str();
}

struct Summary {
  int height = 0;
  double maxupper = 0;
  double minlower = 0;
};

// In-order walk that recomputes every derived field from scratch.
bool check(const ITNode* x, const Interval1D*& prev, std::size_t& count, Summary& out, std::string& msg) {
  if (x == nullptr) {
    out = Summary{};
    return true;
  }
  Summary l;
  Summary r;
  if (!check(x->left.get(), prev, count, l, msg)) return false;
  if (prev != nullptr && key_less(x->in, *prev)) {
    msg = "key order violated at node " + describe(x->in) + " (follows " + describe(*prev) + ")";
    return false;
  }
  prev = &x->in;
  ++count;
  if (!check(x->right.get(), prev, count, r, msg)) return false;

  out.height = 1 + std::max(l.height, r.height);
  out.maxupper = x->in.high();
  out.minlower = x->in.low();
  if (x->left) {
    out.maxupper = std::max(out.maxupper, l.maxupper);
    out.minlower = std::min(out.minlower, l.minlower);
  }
  if (x->right) {
    out.maxupper = std::max(out.maxupper, r.maxupper);
    out.minlower = std::min(out.minlower, r.minlower);
  }
  if (std::abs(l.height - r.height) > 1) {
    msg = "node " + describe(x->in) + " out of balance: left height " + std::to_string(l.height) +
          ", right height " + std::to_string(r.height);
    return false;
  }
  if (x->height != out.height) {
    msg = "node " + describe(x->in) + " stores height " + std::to_string(x->height) + ", actual " +
          std::to_string(out.height);
    return false;
  }
  if (x->maxupper != out.maxupper) {
    msg = "node " + describe(x->in) + " stores maxupper " + std::to_string(x->maxupper) + ", actual " +
          std::to_string(out.maxupper);
    return false;
  }
  if (x->minlower != out.minlower) {
    msg = "node " + describe(x->in) + " stores minlower " + std::to_string(x->minlower) + ", actual " +
          std::to_string(out.minlower);
    return false;
  }
  return true;
}

void dump_node(std::ostream& out, const ITNode* x, int depth) {
  if (x == nullptr) return;
  dump_node(out, x->left.get(), depth + 1);
  out << std::string(2 * static_cast<std::size_t>(depth), ' ') << describe(x->in) << " maxupper=" << x->maxupper
      << " minlower=" << x->minlower << " h=" << x->height << '\n';
  dump_node(out, x->right.get(), depth + 1);
}

}  // namespace

bool key_less(const Interval1D& a, const Interval1D& b) noexcept {
  return std::tuple(a.low(), a.high(), a.id()) < std::tuple(b.low(), b.high(), b.id());
}

IntervalTree::IntervalTree(std::span<const Interval1D> intervals) {
  std::vector<Interval1D> sorted(intervals.begin(), intervals.end());
  std::sort(sorted.begin(), sorted.end(), key_less);
  root_ = build_sorted(sorted);
  size_ = sorted.size();
}

void IntervalTree::insert(const Interval1D& iv) {
  root_ = insert_node(std::move(root_), iv);
  ++size_;
}

void IntervalTree::erase(const Interval1D& iv) {
  bool found = false;
  root_ = erase_node(std::move(root_), iv, found);
  if (!found) throw std::out_of_range("interval " + describe(iv) + " not in tree");
  --size_;
}

bool IntervalTree::contains(const Interval1D& iv) const noexcept {
  const ITNode* x = root_.get();
  while (x != nullptr) {
    if (key_less(iv, x->in)) {
      x = x->left.get();
    } else if (key_less(x->in, iv)) {
      x = x->right.get();
    } else {
      return true;
    }
  }
  return false;
}

TreeDiagnostics IntervalTree::validate() const {
  TreeDiagnostics diag;
  const Interval1D* prev = nullptr;
  std::size_t count = 0;
  Summary summary;
  if (!check(root_.get(), prev, count, summary, diag.message)) {
    diag.ok = false;
    return diag;
  }
  if (count != size_) {
    diag.ok = false;
    diag.message = "size is " + std::to_string(size_) + " but " + std::to_string(count) + " nodes are reachable";
  }
  return diag;
}

void IntervalTree::dump(std::ostream& out) const { dump_node(out, root_.get(), 0); }

IntervalTree it_build(std::span<const Interval1D> intervals) { return IntervalTree(intervals); }

}  // namespace ddm
