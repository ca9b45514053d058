#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace gdt::cli;
  RunConfig config;
  std::string label_column;
  bool no_header = false;

  CLI::App app{"Density-topology clustering of point sets and images"};
  app.option_defaults()->always_capture_default();
  const std::map<std::string, Mode> modes = {
      {"cluster", Mode::cluster}, {"segment", Mode::segment}, {"bench", Mode::bench}};
  std::string mode = "cluster";
  app.add_option("--mode", mode, "What to run")->check(CLI::IsMember({"cluster", "segment", "bench"}));
  app.add_option("--input", config.input, "CSV file (cluster) or PNG image (segment)");
  app.add_option("--output-dir", config.output_dir, "Directory for the output files");
  app.add_option("--kd", config.k_d, "Neighbors used by the density estimate")
      ->check(CLI::PositiveNumber);
  app.add_option("--ks", config.k_s, "Neighbors searched when growing local clusters")
      ->check(CLI::PositiveNumber);
  app.add_option("--alpha", config.alpha, "Edge pruning threshold")->check(CLI::Range(0.0, 1.0));
  app.add_option("--epsilon", config.epsilon, "Noise threshold relative to the root density")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--label-column", label_column,
                 "Ground-truth column (name or 0-based index), excluded from features");
  app.add_option("--seed", config.seed, "Seed for generated data (bench)");
  app.add_flag("--standardize", config.standardize, "Z-score every feature column first");
  app.add_flag("--no-header", no_header, "The CSV has no header row");
  app.add_option("--max-pixels", config.max_pixels, "Largest image accepted by segment");
  app.add_option("--bench-sizes", config.bench_sizes, "Sample counts timed by bench")
      ->delimiter(',');
  app.add_option("--bench-repeats", config.bench_repeats, "Runs per size; the fastest is kept")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.mode = modes.at(mode);
  if (!label_column.empty()) config.label_column = label_column;
  config.has_header = !no_header;
  if (config.mode != Mode::bench && config.input.empty()) {
    std::cerr << "--input is required for --mode "
              << mode << "\n";
    return kExitUsage;
  }

  try {
    return run(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
