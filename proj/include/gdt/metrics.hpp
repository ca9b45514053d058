#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gdt/topology.hpp"

namespace gdt {

// Cluster-by-class counts over the covered (non-noise) points.
struct Contingency {
  std::vector<std::vector<std::size_t>> counts;  // [cluster][class]
  std::vector<std::size_t> cluster_sizes;
  std::vector<std::size_t> class_sizes;
  std::size_t covered = 0;

  // Points with a negative predicted label are skipped.
  static Contingency build(std::span<const int> predicted, std::span<const int> truth);
};

// Largest total of a one-to-one row/column assignment. Rectangular input is
// fine; surplus rows or columns stay unmatched.
std::size_t max_assignment(const std::vector<std::vector<std::size_t>>& counts);

// Best one-to-one cluster->class matching, as a fraction of covered points.
double accuracy(std::span<const int> predicted, std::span<const int> truth);

// Cluster F-measure: sum over classes of |class|/N * max over clusters of F1.
double fscore(std::span<const int> predicted, std::span<const int> truth);

// Hubert-Arabie adjusted Rand index.
double ari(std::span<const int> predicted, std::span<const int> truth);

// Fraction of points not labeled noise.
double coverage(std::span<const int> predicted);

inline double accuracy(const Labeling& pred, std::span<const int> truth) {
  return accuracy(pred.label, truth);
}
inline double fscore(const Labeling& pred, std::span<const int> truth) {
  return fscore(pred.label, truth);
}
inline double ari(const Labeling& pred, std::span<const int> truth) { return ari(pred.label, truth); }
inline double coverage(const Labeling& pred) { return coverage(pred.label); }

}  // namespace gdt
