#include "gdt/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace gdt {

KnnIndex::KnnIndex(PointMatrix points, std::size_t leaf_size)
    : points_(std::move(points)), leaf_size_(std::max<std::size_t>(1, leaf_size)) {
  if (points_.rows() == 0 || points_.cols() == 0) {
    throw std::invalid_argument("empty sample set");
  }
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    for (std::size_t l = 0; l < points_.cols(); ++l) {
      if (!std::isfinite(points_(i, l))) {
        throw std::invalid_argument("non-finite coordinate at row " + std::to_string(i) +
                                    ", column " + std::to_string(l));
      }
    }
  }
  order_.resize(points_.rows());
  std::iota(order_.begin(), order_.end(), PointId{0});
  nodes_.reserve(2 * points_.rows() / leaf_size_ + 1);
  build(0, order_.size());
}

std::size_t KnnIndex::build(std::size_t begin, std::size_t end) {
  const std::size_t node_id = nodes_.size();
  nodes_.push_back(Node{begin, end});
  if (end - begin <= leaf_size_) return node_id;

  std::size_t axis = 0;
  double widest = 0.0;
  for (std::size_t l = 0; l < points_.cols(); ++l) {
    double lo = points_(order_[begin], l);
    double hi = lo;
    for (std::size_t p = begin + 1; p < end; ++p) {
      const double v = points_(order_[p], l);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > widest) {
      widest = hi - lo;
      axis = l;
    }
  }
  // All points coincide; no split can separate them.
  if (widest == 0.0) return node_id;

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end), [&](PointId a, PointId b) {
                     const double va = points_(a, axis);
                     const double vb = points_(b, axis);
                     return va < vb || (va == vb && a < b);
                   });
  const double split = points_(order_[mid], axis);

  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  Node& node = nodes_[node_id];
  node.leaf = false;
  node.axis = axis;
  node.split = split;
  node.left = left;
  node.right = right;
  return node_id;
}

std::vector<Neighbor> KnnIndex::query(std::span<const double> q, std::size_t k) const {
  if (q.size() != dim()) {
    throw std::invalid_argument("query dimension " + std::to_string(q.size()) +
                                " does not match index dimension " + std::to_string(dim()));
  }
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  for (double v : q) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite query coordinate");
  }
  k = std::min(k, size());

  // Max-heap on (squared distance, id): top is the current k-th best.
  using Candidate = std::pair<double, PointId>;
  std::vector<Candidate> heap;
  heap.reserve(k + 1);
  auto offer = [&](double d2, PointId id) {
    const Candidate c{d2, id};
    if (heap.size() < k) {
      heap.push_back(c);
      std::push_heap(heap.begin(), heap.end());
    } else if (c < heap.front()) {
      std::pop_heap(heap.begin(), heap.end());
      heap.back() = c;
      std::push_heap(heap.begin(), heap.end());
    }
  };

  struct Pending {
    std::size_t node;
    double bound;  // lower bound on squared distance to anything under node
  };
  std::vector<Pending> stack;
  stack.push_back({0, 0.0});
  while (!stack.empty()) {
    const Pending top = stack.back();
    stack.pop_back();
    // Equal bounds may still hold a lower-id tie, so only strictly worse subtrees are skipped.
    if (heap.size() == k && top.bound > heap.front().first) continue;

    const Node& node = nodes_[top.node];
    if (node.leaf) {
      for (std::size_t p = node.begin; p < node.end; ++p) {
        const PointId id = order_[p];
        offer(squared_distance(q, points_.row(static_cast<std::size_t>(id))), id);
      }
      continue;
    }
    const double diff = q[node.axis] - node.split;
    const double plane = diff * diff;
    const std::size_t near = diff < 0.0 ? node.left : node.right;
    const std::size_t far = diff < 0.0 ? node.right : node.left;
    stack.push_back({far, std::max(top.bound, plane)});
    stack.push_back({near, top.bound});
  }

  std::sort_heap(heap.begin(), heap.end());
  std::vector<Neighbor> out;
  out.reserve(heap.size());
  for (const auto& [d2, id] : heap) out.push_back({id, std::sqrt(d2)});
  return out;
}

NeighborTable::NeighborTable(const KnnIndex& index, std::size_t k)
    : stride_(std::min(k, index.size())) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  entries_.reserve(stride_ * index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto row = index.query(index.points().row(i), stride_);
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

bool NeighborTable::contains(std::size_t i, PointId j) const noexcept {
  const auto row = of(i);
  return std::any_of(row.begin(), row.end(), [j](const Neighbor& nb) { return nb.id == j; });
}

}  // namespace gdt
