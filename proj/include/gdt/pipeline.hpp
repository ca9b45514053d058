#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gdt/density.hpp"
#include "gdt/growing.hpp"
#include "gdt/neighbors.hpp"
#include "gdt/topology.hpp"

namespace gdt {

struct GdtParams {
  std::size_t k_d = 15;
  std::size_t k_s = 15;
  double alpha = 0.4;
  double epsilon = 0.0;
  // Silverman's rule per dimension when unset.
  std::optional<std::vector<double>> bandwidths;
};

struct StageTimings {
  double index = 0.0;  // seconds
  double density = 0.0;
  double grow = 0.0;
  double graph = 0.0;

  double total() const noexcept { return index + density + grow + graph; }
};

struct GdtResult {
  std::unique_ptr<KnnIndex> index;
  DensityField field;  // refers to *index
  GrowthResult growth;
  TopoGraph graph;  // before pruning
  TopoGraph pruned;
  Labeling labels;
  StageTimings timings;
};

// Density estimation, local-cluster growth, graph construction, pruning and
// labeling over `points`.
GdtResult run_gdt(const PointMatrix& points, const GdtParams& params);

// The stages after density estimation, on a caller-supplied field.
void finish_gdt(GdtResult& result, const GdtParams& params);

}  // namespace gdt
