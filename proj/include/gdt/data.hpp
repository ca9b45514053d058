#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gdt/point_matrix.hpp"
#include "gdt/topology.hpp"

namespace gdt {

struct SampleSet {
  PointMatrix points;
  std::optional<std::vector<int>> truth;
  std::vector<std::string> names;

  std::size_t size() const noexcept { return points.rows(); }
  std::size_t dim() const noexcept { return points.cols(); }
};

// Two concentric rings, n/2 points on the outer ring and the rest on the
// inner one, evenly spaced in angle starting at 0. Isotropic N(0, sigma^2)
// noise from the seeded generator is added to both coordinates, so sigma = 0
// gives the noiseless positions for any seed. truth: 0 outer, 1 inner.
SampleSet gen_rings(std::size_t n, double outer_radius, double inner_radius, double sigma,
                    std::uint64_t seed);

// Rings of radius 1.0 and 0.5.
SampleSet gen_circles(std::size_t n, double sigma, std::uint64_t seed);

// Two interleaved half circles: the upper arc (cos t, sin t) and the lower
// arc (1 - cos t, 0.5 - sin t), t evenly spaced over [0, pi] inclusive.
// Noise as in gen_rings. truth: 0 upper, 1 lower.
SampleSet gen_moons(std::size_t n, double sigma, std::uint64_t seed);

// A face: outer ring, two eye blobs and a mouth arc (truth 0..3).
SampleSet gen_smile(std::size_t n, double sigma, std::uint64_t seed);

// Isotropic 2-d Gaussian blobs with the given centers, points assigned
// round-robin. truth is the blob index.
SampleSet gen_blobs(std::size_t n, const std::vector<std::pair<double, double>>& centers,
                    double sigma, std::uint64_t seed);

struct CsvOptions {
  bool has_header = true;
  // Column name (requires a header) or zero-based index.
  std::optional<std::string> label_column;
};

// Comma-separated numeric table. Empty feature cells are replaced by the
// mean of the column's present values.
SampleSet load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
SampleSet parse_csv(const std::string& text, const CsvOptions& options = {});

// Z-score every column in place. Constant columns are only centered.
void standardize(PointMatrix& points);

// 8-bit-range RGB image, channels stored interleaved in raster order.
struct ImageFrame {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> rgb;  // width * height * 3

  double& at(std::size_t x, std::size_t y, std::size_t c) { return rgb[(y * width + x) * 3 + c]; }
  double at(std::size_t x, std::size_t y, std::size_t c) const {
    return rgb[(y * width + x) * 3 + c];
  }
};

ImageFrame make_image(std::size_t width, std::size_t height);

// One row per pixel in raster order: (r, g, b, x, y), x the column index.
SampleSet image_to_samples(const ImageFrame& image);

inline constexpr std::uint32_t kNoiseColor = 0xD3D3D3;  // light gray

// Packed 0xRRGGBB color for a label. Distinct labels get distinct colors.
std::uint32_t label_color(int label);
// Inverse of label_color; kNoiseLabel for the noise color.
int color_label(std::uint32_t color);

ImageFrame labels_to_image(std::span<const int> labels, std::size_t width, std::size_t height);

}  // namespace gdt
