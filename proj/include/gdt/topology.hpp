#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gdt/density.hpp"
#include "gdt/growing.hpp"

namespace gdt {

struct TopoVertex {
  PointId root = 0;
  double peak = 0.0;  // normalized density at the root
  std::size_t members = 0;
};

struct TopoEdge {
  double weight = 0.0;    // sum of squared midpoint densities over boundary pairs
  double modifier = 0.0;  // squared peak-density ratio, in [0, 1]
  double strength = 0.0;  // weight * modifier
  std::size_t pairs = 0;
  bool kept = true;
};

// Undirected graph over local clusters. Edges are keyed by (smaller root,
// larger root), so symmetry holds by construction.
struct TopoGraph {
  using Key = std::pair<PointId, PointId>;

  std::vector<TopoVertex> vertices;  // ascending root id
  std::map<Key, TopoEdge> edges;
  std::map<PointId, double> strongest;  // max incident strength, 0 if isolated

  static Key key(PointId a, PointId b) noexcept { return a < b ? Key{a, b} : Key{b, a}; }

  const TopoEdge* find(PointId a, PointId b) const;
  std::size_t kept_edges() const noexcept;
};

struct PruneConfig {
  double alpha = 0.4;
};

struct Labeling {
  std::vector<int> label;  // -1 for noise
  std::size_t num_labels = 0;
  double coverage = 0.0;
};

inline constexpr int kNoiseLabel = -1;

// Peak similarity min(a/b, b/a), squared. Two zero peaks count as equal.
double peak_modifier(double peak_a, double peak_b) noexcept;

// Cut threshold that minimizes the per-vertex keep/cut loss with balance
// weight beta: 1 / (sqrt(beta) + 1).
double alpha_from_beta(double beta);

TopoGraph build_topograph(const GrowthResult& growth, const DensityField& field);

// Cuts edge (i, j) when its strength relative to either endpoint's
// strongest edge falls below alpha. Strongest edges are taken from the
// unpruned graph. Cut edges remain in the map with kept == false.
TopoGraph prune_edges(const TopoGraph& graph, const PruneConfig& config);

// Connected components over kept edges. Labels are numbered in ascending
// order of each component's smallest root id.
Labeling assign_labels(const GrowthResult& growth, const TopoGraph& pruned);

nlohmann::json topograph_to_json(const TopoGraph& graph);

}  // namespace gdt
