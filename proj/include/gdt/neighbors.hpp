#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gdt/point_matrix.hpp"

namespace gdt {

struct Neighbor {
  PointId id = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Exact Euclidean k-nearest-neighbor index backed by a kd-tree.
//
// Results are ordered by (squared distance, id) so equidistant points come
// back lowest id first. A query at an indexed point returns that point
// itself at distance 0, and it counts toward k.
//
// Immutable after construction; concurrent queries are safe.
class KnnIndex {
 public:
  explicit KnnIndex(PointMatrix points, std::size_t leaf_size = 12);

  std::vector<Neighbor> query(std::span<const double> q, std::size_t k) const;

  std::size_t size() const noexcept { return points_.rows(); }
  std::size_t dim() const noexcept { return points_.cols(); }
  const PointMatrix& points() const noexcept { return points_; }

 private:
  struct Node {
    // Leaf: [begin, end) into order_. Inner: split on `axis` at `split`.
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t axis = 0;
    double split = 0.0;
    bool leaf = true;
  };

  std::size_t build(std::size_t begin, std::size_t end);

  PointMatrix points_;
  std::vector<PointId> order_;
  std::vector<Node> nodes_;
  std::size_t leaf_size_;
};

// The k nearest neighbors (self included) of every indexed point, stored
// row by row with a fixed stride of min(k, n).
class NeighborTable {
 public:
  NeighborTable() = default;
  NeighborTable(const KnnIndex& index, std::size_t k);

  std::span<const Neighbor> of(std::size_t i) const noexcept {
    return {entries_.data() + i * stride_, stride_};
  }
  std::size_t size() const noexcept { return stride_ == 0 ? 0 : entries_.size() / stride_; }
  std::size_t k() const noexcept { return stride_; }

  bool contains(std::size_t i, PointId j) const noexcept;

 private:
  std::size_t stride_ = 0;
  std::vector<Neighbor> entries_;
};

}  // namespace gdt
