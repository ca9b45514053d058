#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdt/pipeline.hpp"

namespace gdt::cli {

enum class Mode { cluster, segment, bench };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

struct RunConfig {
  Mode mode = Mode::cluster;
  std::filesystem::path input;
  std::filesystem::path output_dir = ".";
  std::size_t k_d = 15;
  std::size_t k_s = 15;
  double alpha = 0.4;
  double epsilon = 0.0;
  std::optional<std::string> label_column;
  bool has_header = true;
  std::uint64_t seed = 0;
  bool standardize = false;
  std::size_t max_pixels = std::size_t{1} << 22;
  std::vector<std::size_t> bench_sizes = {10000, 20000, 40000, 80000};
  std::size_t bench_repeats = 3;

  GdtParams params() const { return GdtParams{k_d, k_s, alpha, epsilon, std::nullopt}; }
};

// Cluster a CSV file. Writes labels.csv, graph.json and, when a label
// column is given, metrics.json into output_dir.
int cmd_cluster(const RunConfig& config, std::ostream& out, std::ostream& err);

// Segment a PNG on (r, g, b, x, y) samples. Writes segments.png,
// segments.json, labels.csv and graph.json into output_dir.
int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::size_t n = 0;
  StageTimings timings;  // fastest of the repeats, per stage
  std::size_t local_clusters = 0;
  std::size_t labels = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<double> ratios;  // total(n_{i+1}) / total(n_i)
};

BenchReport run_bench(const std::vector<std::size_t>& sizes, std::size_t k,
                      std::size_t repeats, std::uint64_t seed);

// Times the pipeline on growing blob data sets. Writes bench.json.
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gdt::cli
