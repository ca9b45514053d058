#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "gdt/data.hpp"
#include "gdt/density.hpp"
#include "oracles.hpp"

using gdt::DensityConfig;
using gdt::KnnIndex;
using gdt::PointMatrix;

namespace {

DensityConfig config_for(const PointMatrix& p, std::size_t k_d) {
  DensityConfig c;
  c.k_d = k_d;
  c.bandwidths = gdt::silverman_bandwidths(p);
  return c;
}

// Column with sample standard deviation exactly `s` and n = 1000.
PointMatrix column_with_std(double s) {
  PointMatrix p(1000, 1);
  const double a = s * std::sqrt(999.0 / 1000.0);
  for (std::size_t i = 0; i < 1000; ++i) p(i, 0) = (i % 2 == 0) ? a : -a;
  return p;
}

}  // namespace

TEST_CASE("silverman bandwidth closed form") {
  const double unit = std::pow(4.0 / 3000.0, 0.2);
  CHECK(unit == doctest::Approx(0.26607).epsilon(1e-4));
  CHECK(gdt::silverman_bandwidths(column_with_std(1.0))[0] == doctest::Approx(unit).epsilon(1e-12));
  CHECK(gdt::silverman_bandwidths(column_with_std(2.0))[0] ==
        doctest::Approx(2.0 * unit).epsilon(1e-12));
  CHECK(2.0 * unit == doctest::Approx(0.53215).epsilon(1e-4));
}

TEST_CASE("constant dimension gets the floor") {
  PointMatrix p(4, 2, {0, 5, 1, 5, 2, 5, 3, 5});
  const double floor = gdt::default_bandwidth_floor(p);
  CHECK(floor == doctest::Approx(3e-9));
  const auto h = gdt::silverman_bandwidths(p, floor);
  CHECK(h[1] == floor);
  CHECK(h[0] > floor);
  CHECK_THROWS_WITH(gdt::silverman_bandwidths(PointMatrix(1, 2, {1, 2})),
                    doctest::Contains("need >=2 samples"));
}

TEST_CASE("repeated point is degenerate with f = 1") {
  const KnnIndex index(PointMatrix(3, 2, {1, 1, 1, 1, 1, 1}));
  DensityConfig c;
  c.k_d = 1;
  c.bandwidths = {0.5, 0.5};
  const auto field = gdt::estimate_density(index, c);
  for (double p : field.raw) CHECK(p == 1.0);
  for (double f : field.normalized) CHECK(f == 1.0);
  CHECK(field.degenerate());
  const std::vector<double> q{1.0, 1.0};
  CHECK(gdt::density_at(field, q) == 1.0);
}

TEST_CASE("max-min normalization of three values") {
  gdt::DensityField field;
  field.raw = {2.0, 4.0, 6.0};
  gdt::normalize_densities(field);
  CHECK(field.normalized == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(field.raw_min == 2.0);
  CHECK(field.raw_max == 6.0);
}

TEST_CASE("full neighborhood equals the global KDE") {
  const PointMatrix p = oracle::uniform_points(300, 2, 5);
  const KnnIndex index(p);
  const auto c = config_for(p, p.rows());
  const auto field = gdt::estimate_density(index, c);
  const auto want = oracle::global_kde(p, c.bandwidths);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    CHECK(std::abs(field.raw[i] - want[i]) <= 1e-9 * want[i]);
  }
}

TEST_CASE("local KDE agrees with brute-force neighborhoods") {
  const PointMatrix p = oracle::uniform_points(250, 3, 6);
  const KnnIndex index(p);
  const auto c = config_for(p, 12);
  const auto field = gdt::estimate_density(index, c);
  const auto want = oracle::local_kde(p, c.bandwidths, 12);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    CHECK(field.raw[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("normalized field spans [0, 1] and keeps the order of raw values") {
  const PointMatrix p = oracle::uniform_points(400, 2, 8);
  const KnnIndex index(p);
  const auto field = gdt::estimate_density(index, config_for(p, 15));
  CHECK(*std::min_element(field.normalized.begin(), field.normalized.end()) == 0.0);
  CHECK(*std::max_element(field.normalized.begin(), field.normalized.end()) == 1.0);
  std::vector<std::size_t> by_raw(p.rows()), by_f(p.rows());
  std::iota(by_raw.begin(), by_raw.end(), 0);
  std::iota(by_f.begin(), by_f.end(), 0);
  std::stable_sort(by_raw.begin(), by_raw.end(),
                   [&](auto a, auto b) { return field.raw[a] < field.raw[b]; });
  std::stable_sort(by_f.begin(), by_f.end(),
                   [&](auto a, auto b) { return field.normalized[a] < field.normalized[b]; });
  CHECK(by_raw == by_f);
}

TEST_CASE("translation leaves raw densities unchanged") {
  const PointMatrix p = oracle::uniform_points(300, 2, 9);
  PointMatrix shifted = p;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    shifted(i, 0) += 3.0;
    shifted(i, 1) -= 2.0;
  }
  const KnnIndex a(p), b(shifted);
  const auto c = config_for(p, 15);
  const auto fa = gdt::estimate_density(a, c);
  const auto fb = gdt::estimate_density(b, c);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    CHECK(std::abs(fa.raw[i] - fb.raw[i]) <= 1e-12 * fa.raw[i]);
  }
}

TEST_CASE("density_at") {
  const gdt::SampleSet blob = gdt::gen_blobs(500, {{0.0, 0.0}}, 1.0, 3);
  const KnnIndex index(blob.points);
  const auto field = gdt::estimate_density(index, config_for(blob.points, 15));

  SUBCASE("at a sample it reproduces the stored value") {
    for (std::size_t i = 0; i < 500; i += 17) {
      CHECK(gdt::density_at(field, blob.points.row(i)) == field.normalized[i]);
    }
  }
  SUBCASE("far away it clamps to zero") {
    const std::vector<double> q{100.0, -100.0};
    CHECK(gdt::density_at(field, q) == 0.0);
  }
  SUBCASE("off-sample value matches a brute-force evaluation") {
    const PointMatrix queries = oracle::uniform_points(40, 2, 4, -1.0, 1.0);
    for (std::size_t r = 0; r < queries.rows(); ++r) {
      double raw = 0.0;
      for (const auto& hit : oracle::knn(blob.points, queries.row(r), 15)) {
        double prod = 1.0;
        for (std::size_t l = 0; l < 2; ++l) {
          const double u = (queries(r, l) - blob.points(hit.id, l)) / field.config.bandwidths[l];
          prod *= std::exp(-0.5 * u * u);
        }
        raw += prod;
      }
      const double want =
          std::clamp((raw - field.raw_min) / (field.raw_max - field.raw_min), 0.0, 1.0);
      CHECK(gdt::density_at(field, queries.row(r)) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  SUBCASE("midpoints of close core pairs lie near their endpoints") {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < 500; ++i) {
      if (std::hypot(blob.points(i, 0), blob.points(i, 1)) > 1.0) continue;
      const auto j = static_cast<std::size_t>(index.query(blob.points.row(i), 2)[1].id);
      const std::vector<double> mid{0.5 * (blob.points(i, 0) + blob.points(j, 0)),
                                    0.5 * (blob.points(i, 1) + blob.points(j, 1))};
      const double lo = std::min(field.normalized[i], field.normalized[j]);
      const double hi = std::max(field.normalized[i], field.normalized[j]);
      const double v = gdt::density_at(field, mid);
      CHECK(v >= lo - 0.1);
      CHECK(v <= hi + 0.1);
      ++checked;
    }
    CHECK(checked > 100);
  }
  SUBCASE("dimension mismatch") {
    const std::vector<double> q{0.0};
    CHECK_THROWS(gdt::density_at(field, q));
  }
}

TEST_CASE("estimate_density errors") {
  const PointMatrix p = oracle::uniform_points(10, 2, 1);
  const KnnIndex index(p);
  auto c = config_for(p, 11);
  CHECK_THROWS(gdt::estimate_density(index, c));
  c.k_d = 5;
  c.bandwidths = {0.1, 0.0};
  CHECK_THROWS(gdt::estimate_density(index, c));
  c.bandwidths = {0.1};
  CHECK_THROWS(gdt::estimate_density(index, c));
}
