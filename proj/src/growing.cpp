#include "gdt/growing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gdt {

std::size_t GrowthResult::noise_count() const noexcept {
  return static_cast<std::size_t>(std::count(root.begin(), root.end(), kNoise));
}

std::vector<PointId> birth_order(std::span<const double> density) {
  std::vector<PointId> order(density.size());
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    const double fa = density[static_cast<std::size_t>(a)];
    const double fb = density[static_cast<std::size_t>(b)];
    return fa > fb || (fa == fb && a < b);
  });
  return order;
}

std::optional<PointId> select_parent(PointId i, std::span<const Neighbor> neighbors,
                                     std::span<const double> density,
                                     std::span<const std::size_t> rank) {
  const auto ui = static_cast<std::size_t>(i);
  std::optional<PointId> best;
  double best_slope = -std::numeric_limits<double>::infinity();
  for (const Neighbor& nb : neighbors) {
    const auto uj = static_cast<std::size_t>(nb.id);
    if (rank[uj] >= rank[ui]) continue;
    const double rise = density[uj] - density[ui];
    const double slope =
        nb.distance > 0.0 ? rise / nb.distance : std::numeric_limits<double>::infinity();
    if (!best || slope > best_slope || (slope == best_slope && nb.id < *best)) {
      best = nb.id;
      best_slope = slope;
    }
  }
  return best;
}

GrowthResult grow(const DensityField& field, const GrowthConfig& config) {
  if (field.index == nullptr) throw std::invalid_argument("density field has no index");
  const KnnIndex& index = *field.index;
  const std::size_t n = index.size();
  if (field.normalized.size() != n || field.raw.size() != n) {
    throw std::invalid_argument("density field size does not match index size");
  }
  if (config.k_s == 0 || config.k_s > n) {
    throw std::invalid_argument("k_s must be in [1, n]");
  }
  if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in [0, 1]");
  }

  const std::span<const double> f = field.normalized;
  const NeighborTable table(index, config.k_s);

  GrowthResult result;
  result.birth_order = birth_order(f);
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[static_cast<std::size_t>(result.birth_order[r])] = r;

  result.parent.assign(n, kNoise);
  result.root.assign(n, kNoise);

  for (const PointId i : result.birth_order) {
    const auto ui = static_cast<std::size_t>(i);
    const auto parent = select_parent(i, table.of(ui), f, rank);
    if (!parent) {
      result.parent[ui] = i;
      result.root[ui] = i;
      continue;
    }
    result.parent[ui] = *parent;
    const PointId r = result.root[static_cast<std::size_t>(*parent)];
    // Descendants of noise stay noise.
    if (r == kNoise) continue;

    const double peak = f[static_cast<std::size_t>(r)];
    const double ratio = peak > 0.0 ? f[ui] / peak : 1.0;
    if (ratio < config.epsilon) continue;
    result.root[ui] = r;

    for (const Neighbor& nb : table.of(ui)) {
      const auto us = static_cast<std::size_t>(nb.id);
      if (rank[us] >= rank[ui]) continue;
      const PointId rs = result.root[us];
      if (rs == kNoise || rs == r) continue;
      if (!table.contains(us, i)) continue;
      result.boundary_pairs.push_back({i, nb.id, r, rs});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (result.root[i] != kNoise) result.clusters[result.root[i]].push_back(static_cast<PointId>(i));
  }
  return result;
}

}  // namespace gdt
