#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gdt/data.hpp"
#include "gdt/metrics.hpp"
#include "gdt/png_io.hpp"
#include "gdt/union_find.hpp"
#include "json.hpp"

namespace gdt::cli {

namespace {

using nlohmann::json;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string labels_csv(const Labeling& labels) {
  std::string text = "id,label\n";
  text.reserve(labels.label.size() * 8);
  for (std::size_t i = 0; i < labels.label.size(); ++i) {
    text += std::to_string(i);
    text += ',';
    text += std::to_string(labels.label[i]);
    text += '\n';
  }
  return text;
}

json params_json(const RunConfig& c) {
  return {{"k_d", c.k_d}, {"k_s", c.k_s}, {"alpha", c.alpha}, {"epsilon", c.epsilon}};
}

json graph_json(const RunConfig& c, const GdtResult& r) {
  json g = topograph_to_json(r.pruned);
  g["params"] = params_json(c);
  g["local_clusters"] = r.growth.clusters.size();
  g["boundary_pairs"] = r.growth.boundary_pairs.size();
  g["kept_edges"] = r.pruned.kept_edges();
  g["num_labels"] = r.labels.num_labels;
  return g;
}

void validate(const RunConfig& c) {
  if (c.k_d == 0 || c.k_s == 0) throw std::invalid_argument("--kd and --ks must be positive");
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) throw std::invalid_argument("--alpha must be in [0, 1]");
  if (!(c.epsilon >= 0.0 && c.epsilon <= 1.0)) {
    throw std::invalid_argument("--epsilon must be in [0, 1]");
  }
}

void prepare_output(const RunConfig& c) {
  std::filesystem::create_directories(c.output_dir);
}

// Pixels sharing a label and a 4-neighborhood edge form one spatial region.
std::size_t spatial_regions(const Labeling& labels, std::size_t width, std::size_t height) {
  UnionFind uf(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const std::size_t p = y * width + x;
      if (x + 1 < width && labels.label[p] == labels.label[p + 1]) uf.unite(p, p + 1);
      if (y + 1 < height && labels.label[p] == labels.label[p + width]) uf.unite(p, p + width);
    }
  }
  std::size_t regions = 0;
  for (std::size_t p = 0; p < width * height; ++p) {
    if (labels.label[p] != kNoiseLabel && uf.find(p) == p) ++regions;
  }
  return regions;
}

}  // namespace

int cmd_cluster(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  SampleSet data = load_csv(config.input, CsvOptions{config.has_header, config.label_column});
  if (config.standardize) standardize(data.points);
  prepare_output(config);

  const GdtResult result = run_gdt(data.points, config.params());
  write_text(config.output_dir / "labels.csv", labels_csv(result.labels));
  write_text(config.output_dir / "graph.json", graph_json(config, result).dump(2) + "\n");

  out << "samples " << data.size() << ", dims " << data.dim() << ", local clusters "
      << result.growth.clusters.size() << ", labels " << result.labels.num_labels
      << ", coverage " << result.labels.coverage << "\n";

  if (data.truth) {
    json metrics = {{"coverage", result.labels.coverage},
                    {"num_labels", result.labels.num_labels},
                    {"local_clusters", result.growth.clusters.size()}};
    try {
      metrics["accuracy"] = accuracy(result.labels, *data.truth);
      metrics["fscore"] = fscore(result.labels, *data.truth);
      metrics["ari"] = ari(result.labels, *data.truth);
      out << "accuracy " << metrics["accuracy"].get<double>() << ", fscore "
          << metrics["fscore"].get<double>() << ", ari " << metrics["ari"].get<double>() << "\n";
    } catch (const std::exception& e) {
      metrics["error"] = e.what();
      err << "metrics: " << e.what() << "\n";
    }
    write_text(config.output_dir / "metrics.json", metrics.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  validate(config);
  const ImageFrame image = read_png(config.input);
  if (image.width * image.height > config.max_pixels) {
    throw std::runtime_error("image has " + std::to_string(image.width * image.height) +
                             " pixels, limit is " + std::to_string(config.max_pixels));
  }
  SampleSet samples = image_to_samples(image);
  if (config.standardize) standardize(samples.points);
  prepare_output(config);

  const GdtResult result = run_gdt(samples.points, config.params());
  write_png(config.output_dir / "segments.png",
            labels_to_image(result.labels.label, image.width, image.height));
  write_text(config.output_dir / "labels.csv", labels_csv(result.labels));
  write_text(config.output_dir / "graph.json", graph_json(config, result).dump(2) + "\n");

  std::map<int, std::size_t> pixels;
  for (int l : result.labels.label) ++pixels[l];
  json per_label = json::array();
  for (const auto& [label, count] : pixels) {
    per_label.push_back({{"label", label}, {"pixels", count}});
  }
  const json summary = {{"width", image.width},
                        {"height", image.height},
                        {"regions", result.labels.num_labels},
                        {"spatial_regions", spatial_regions(result.labels, image.width, image.height)},
                        {"local_clusters", result.growth.clusters.size()},
                        {"coverage", result.labels.coverage},
                        {"params", params_json(config)},
                        {"labels", per_label}};
  write_text(config.output_dir / "segments.json", summary.dump(2) + "\n");
  out << image.width << "x" << image.height << " pixels, " << result.labels.num_labels
      << " regions, coverage " << result.labels.coverage << "\n";
  return kExitOk;
}

BenchReport run_bench(const std::vector<std::size_t>& sizes, std::size_t k, std::size_t repeats,
                      std::uint64_t seed) {
  const std::vector<std::pair<double, double>> centers = {
      {0.0, 0.0}, {6.0, 0.0}, {0.0, 6.0}, {6.0, 6.0}, {3.0, 3.0}};
  BenchReport report;
  for (std::size_t n : sizes) {
    const SampleSet data = gen_blobs(n, centers, 1.0, seed);
    BenchRow row;
    row.n = n;
    constexpr double kInf = std::numeric_limits<double>::infinity();
    row.timings = StageTimings{kInf, kInf, kInf, kInf};
    for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); ++rep) {
      const GdtResult r = run_gdt(data.points, GdtParams{k, k, 0.4, 0.0, std::nullopt});
      row.timings.index = std::min(row.timings.index, r.timings.index);
      row.timings.density = std::min(row.timings.density, r.timings.density);
      row.timings.grow = std::min(row.timings.grow, r.timings.grow);
      row.timings.graph = std::min(row.timings.graph, r.timings.graph);
      row.local_clusters = r.growth.clusters.size();
      row.labels = r.labels.num_labels;
    }
    report.rows.push_back(row);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    report.ratios.push_back(report.rows[i].timings.total() / report.rows[i - 1].timings.total());
  }
  return report;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.bench_sizes.empty()) throw std::invalid_argument("no benchmark sizes");
  prepare_output(config);
  const BenchReport report = run_bench(config.bench_sizes, 15, config.bench_repeats, config.seed);

  json rows = json::array();
  out << std::setw(8) << "n" << std::setw(11) << "index" << std::setw(11) << "density"
      << std::setw(11) << "grow" << std::setw(11) << "graph" << std::setw(11) << "total"
      << std::setw(9) << "ratio\n";
  out << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const BenchRow& r = report.rows[i];
    out << std::setw(8) << r.n << std::setw(11) << r.timings.index << std::setw(11)
        << r.timings.density << std::setw(11) << r.timings.grow << std::setw(11)
        << r.timings.graph << std::setw(11) << r.timings.total();
    if (i > 0) out << std::setw(8) << std::setprecision(2) << report.ratios[i - 1]
                   << std::setprecision(4);
    out << "\n";
    rows.push_back({{"n", r.n},
                    {"index_s", r.timings.index},
                    {"density_s", r.timings.density},
                    {"grow_s", r.timings.grow},
                    {"graph_s", r.timings.graph},
                    {"total_s", r.timings.total()},
                    {"local_clusters", r.local_clusters},
                    {"labels", r.labels}});
  }
  const json doc = {{"k_d", 15}, {"k_s", 15}, {"rows", rows}, {"ratios", report.ratios}};
  write_text(config.output_dir / "bench.json", doc.dump(2) + "\n");
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.mode) {
    case Mode::cluster:
      return cmd_cluster(config, out, err);
    case Mode::segment:
      return cmd_segment(config, out, err);
    case Mode::bench:
      return cmd_bench(config, out, err);
  }
  return kExitUsage;
}

}  // namespace gdt::cli
