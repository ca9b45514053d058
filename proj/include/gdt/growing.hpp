#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gdt/density.hpp"
#include "gdt/neighbors.hpp"

namespace gdt {

struct GrowthConfig {
  std::size_t k_s = 15;
  double epsilon = 0.0;  // noise threshold on f(x) / f(root)
};

// A mutual k_s-neighbor pair whose endpoints grew into different local
// clusters. `later` is the point that was born second.
struct BoundaryPair {
  PointId later = 0;
  PointId earlier = 0;
  PointId later_root = 0;
  PointId earlier_root = 0;

  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

struct GrowthResult {
  std::vector<PointId> parent;  // parent[i] == i for local maxima
  std::vector<PointId> root;    // kNoise for dropped points
  std::map<PointId, std::vector<PointId>> clusters;  // root -> members, ascending
  std::vector<BoundaryPair> boundary_pairs;
  std::vector<PointId> birth_order;  // descending density, ties by id

  std::size_t noise_count() const noexcept;
};

// Birth order: descending density, equal densities by ascending id.
std::vector<PointId> birth_order(std::span<const double> density);

// Steepest-ascent parent among the neighbors born before `i`, where `rank`
// maps a point to its position in the birth order. Slope is
// (f[j] - f[i]) / d(i, j); a born neighbor at distance 0 has infinite slope.
// Equal slopes go to the smaller id. Empty when no neighbor was born earlier.
std::optional<PointId> select_parent(PointId i, std::span<const Neighbor> neighbors,
                                     std::span<const double> density,
                                     std::span<const std::size_t> rank);

GrowthResult grow(const DensityField& field, const GrowthConfig& config);

}  // namespace gdt
