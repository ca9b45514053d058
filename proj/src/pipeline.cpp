#include "gdt/pipeline.hpp"

#include <chrono>

namespace gdt {

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

GdtResult run_gdt(const PointMatrix& points, const GdtParams& params) {
  GdtResult result;
  Stopwatch clock;
  result.index = std::make_unique<KnnIndex>(points);
  result.timings.index = clock.lap();

  DensityConfig config;
  config.k_d = params.k_d;
  config.bandwidth_floor = default_bandwidth_floor(points);
  config.bandwidths = params.bandwidths ? *params.bandwidths
                                        : silverman_bandwidths(points, config.bandwidth_floor);
  result.field = estimate_density(*result.index, config);
  result.timings.density = clock.lap();

  finish_gdt(result, params);
  return result;
}

void finish_gdt(GdtResult& result, const GdtParams& params) {
  Stopwatch clock;
  result.growth = grow(result.field, GrowthConfig{params.k_s, params.epsilon});
  result.timings.grow = clock.lap();

  result.graph = build_topograph(result.growth, result.field);
  result.pruned = prune_edges(result.graph, PruneConfig{params.alpha});
  result.labels = assign_labels(result.growth, result.pruned);
  result.timings.graph = clock.lap();
}

}  // namespace gdt
