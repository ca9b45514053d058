#include "gdt/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gdt {

double default_bandwidth_floor(const PointMatrix& points) {
  double range = 0.0;
  for (std::size_t l = 0; l < points.cols(); ++l) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
      const double v = points(i, l);
      if (i == 0 || v < lo) lo = v;
      if (i == 0 || v > hi) hi = v;
    }
    range = std::max(range, hi - lo);
  }
  return 1e-9 * (range > 0.0 ? range : 1.0);
}

std::vector<double> silverman_bandwidths(const PointMatrix& points, double floor) {
  const std::size_t n = points.rows();
  if (n < 2) throw std::invalid_argument("need >=2 samples for bandwidth");
  if (!(floor > 0.0)) throw std::invalid_argument("bandwidth floor must be positive");

  std::vector<double> h(points.cols());
  for (std::size_t l = 0; l < points.cols(); ++l) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += points(i, l);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dv = points(i, l) - mean;
      ss += dv * dv;
    }
    const double sigma = std::sqrt(ss / static_cast<double>(n - 1));
    const double rule = std::pow(4.0 * std::pow(sigma, 5.0) / (3.0 * static_cast<double>(n)), 0.2);
    h[l] = std::max(rule, floor);
  }
  return h;
}

std::vector<double> silverman_bandwidths(const PointMatrix& points) {
  return silverman_bandwidths(points, default_bandwidth_floor(points));
}

double kernel_sum(const PointMatrix& points, std::span<const Neighbor> neighbors,
                  std::span<const double> q, std::span<const double> bandwidths) {
  double p = 0.0;
  for (const Neighbor& nb : neighbors) {
    const auto x = points.row(static_cast<std::size_t>(nb.id));
    // prod_l exp(-u_l^2 / 2h_l^2) == exp(-sum_l u_l^2 / 2h_l^2)
    double exponent = 0.0;
    for (std::size_t l = 0; l < q.size(); ++l) {
      const double u = (q[l] - x[l]) / bandwidths[l];
      exponent += u * u;
    }
    p += std::exp(-0.5 * exponent);
  }
  return p;
}

void normalize_densities(DensityField& field) {
  if (field.raw.empty()) throw std::invalid_argument("empty density field");
  const auto [lo, hi] = std::minmax_element(field.raw.begin(), field.raw.end());
  field.raw_min = *lo;
  field.raw_max = *hi;
  field.normalized.resize(field.raw.size());
  if (field.degenerate()) {
    std::fill(field.normalized.begin(), field.normalized.end(), 1.0);
    return;
  }
  const double span = field.raw_max - field.raw_min;
  for (std::size_t i = 0; i < field.raw.size(); ++i) {
    field.normalized[i] = (field.raw[i] - field.raw_min) / span;
  }
}

namespace {

void validate(const KnnIndex& index, const DensityConfig& config) {
  if (config.k_d == 0) throw std::invalid_argument("k_d must be at least 1");
  if (config.k_d > index.size()) {
    throw std::invalid_argument("k_d (" + std::to_string(config.k_d) +
                                ") exceeds sample count (" + std::to_string(index.size()) + ")");
  }
  if (config.bandwidths.size() != index.dim()) {
    throw std::invalid_argument("bandwidth vector has wrong dimension");
  }
  if (!(config.kernel_scale > 0.0) || !std::isfinite(config.kernel_scale)) {
    throw std::invalid_argument("kernel scale must be positive");
  }
  for (double h : config.bandwidths) {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("non-positive bandwidth");
  }
}

}  // namespace

DensityField estimate_density(const KnnIndex& index, const DensityConfig& config) {
  validate(index, config);
  DensityField field;
  field.config = config;
  field.index = &index;
  field.raw.resize(index.size());
  const PointMatrix& points = index.points();
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto nbrs = index.query(points.row(i), config.k_d);
    field.raw[i] =
        config.kernel_scale * kernel_sum(points, nbrs, points.row(i), config.bandwidths);
  }
  normalize_densities(field);
  return field;
}

double density_at(const DensityField& field, std::span<const double> q) {
  if (field.index == nullptr) throw std::logic_error("density field has no index");
  if (q.size() != field.index->dim()) {
    throw std::invalid_argument("query dimension does not match density field");
  }
  const auto nbrs = field.index->query(q, field.config.k_d);
  const double raw = field.config.kernel_scale *
                     kernel_sum(field.index->points(), nbrs, q, field.config.bandwidths);
  if (field.degenerate()) {
    // Flat field: 1 wherever the sample level is reached, decaying to 0 off-support.
    return raw >= field.raw_min ? 1.0 : raw / field.raw_min;
  }
  const double f = (raw - field.raw_min) / (field.raw_max - field.raw_min);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace gdt
