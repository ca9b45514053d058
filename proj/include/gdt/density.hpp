#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gdt/neighbors.hpp"
#include "gdt/point_matrix.hpp"

namespace gdt {

struct DensityConfig {
  std::size_t k_d = 15;
  std::vector<double> bandwidths;  // one per dimension
  double bandwidth_floor = 1e-9;
  // Constant factor applied to every kernel sum, such as a normalizing
  // constant. Normalized densities are unaffected by it.
  double kernel_scale = 1.0;
};

// Local kernel densities over a sample set.
//
// `raw` holds the Gaussian-product kernel sums over each point's k_d nearest
// neighbors (the point itself included). `normalized` is the max-min scaled
// copy in [0, 1]; `raw_min`/`raw_max` are kept so off-sample queries are
// scaled with the same constants. When every raw value is equal the
// normalized field is identically 1.
struct DensityField {
  std::vector<double> raw;
  std::vector<double> normalized;
  double raw_min = 0.0;
  double raw_max = 0.0;
  DensityConfig config;
  const KnnIndex* index = nullptr;

  bool degenerate() const noexcept { return !(raw_max > raw_min); }
};

// 1e-9 times the largest per-dimension coordinate range (or 1e-9 if every
// dimension is constant).
double default_bandwidth_floor(const PointMatrix& points);

// Silverman's rule of thumb per dimension, h = (4 s^5 / (3 n))^(1/5), with
// s the n-1 sample standard deviation. Values below `floor` are clamped.
std::vector<double> silverman_bandwidths(const PointMatrix& points, double floor);
std::vector<double> silverman_bandwidths(const PointMatrix& points);

// Kernel sum at `q` over the given neighbors of the index.
double kernel_sum(const PointMatrix& points, std::span<const Neighbor> neighbors,
                  std::span<const double> q, std::span<const double> bandwidths);

// Max-min scaling. Fills normalized/raw_min/raw_max from `field.raw`.
void normalize_densities(DensityField& field);

DensityField estimate_density(const KnnIndex& index, const DensityConfig& config);

// Normalized density at an arbitrary point, scaled with the field's stored
// constants and clamped to [0, 1].
double density_at(const DensityField& field, std::span<const double> q);

}  // namespace gdt
