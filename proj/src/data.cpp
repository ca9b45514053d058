#include "gdt/data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gdt {

namespace {

void require_count(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(what) + ": need at least " + std::to_string(minimum) +
                                " points");
  }
}

void add_noise(PointMatrix& points, double sigma, std::mt19937_64& rng) {
  if (sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
  std::normal_distribution<double> noise(0.0, 1.0);
  for (double& v : points.data()) v += sigma * noise(rng);
}

std::vector<std::string> two_d_names() { return {"x", "y"}; }

}  // namespace

SampleSet gen_rings(std::size_t n, double outer_radius, double inner_radius, double sigma,
                    std::uint64_t seed) {
  require_count(n, 4, "gen_rings");
  std::mt19937_64 rng(seed);
  SampleSet s{PointMatrix(n, 2), std::vector<int>(n), two_d_names()};
  const std::size_t outer = n / 2;
  const std::size_t inner = n - outer;
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_outer = i < outer;
    const double r = is_outer ? outer_radius : inner_radius;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(is_outer ? outer : inner);
    const double t = step * static_cast<double>(is_outer ? i : i - outer);
    s.points(i, 0) = r * std::cos(t);
    s.points(i, 1) = r * std::sin(t);
    (*s.truth)[i] = is_outer ? 0 : 1;
  }
  add_noise(s.points, sigma, rng);
  return s;
}

SampleSet gen_circles(std::size_t n, double sigma, std::uint64_t seed) {
  return gen_rings(n, 1.0, 0.5, sigma, seed);
}

SampleSet gen_moons(std::size_t n, double sigma, std::uint64_t seed) {
  require_count(n, 4, "gen_moons");
  std::mt19937_64 rng(seed);
  SampleSet s{PointMatrix(n, 2), std::vector<int>(n), two_d_names()};
  const std::size_t upper = n / 2;
  const std::size_t lower = n - upper;
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_upper = i < upper;
    const std::size_t count = is_upper ? upper : lower;
    const std::size_t k = is_upper ? i : i - upper;
    const double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(count - 1);
    if (is_upper) {
      s.points(i, 0) = std::cos(t);
      s.points(i, 1) = std::sin(t);
    } else {
      s.points(i, 0) = 1.0 - std::cos(t);
      s.points(i, 1) = 0.5 - std::sin(t);
    }
    (*s.truth)[i] = is_upper ? 0 : 1;
  }
  add_noise(s.points, sigma, rng);
  return s;
}

SampleSet gen_smile(std::size_t n, double sigma, std::uint64_t seed) {
  require_count(n, 8, "gen_smile");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> blob(0.0, 1.0);
  SampleSet s{PointMatrix(n, 2), std::vector<int>(n), two_d_names()};

  // 40% face ring, 15% per eye, 30% mouth. Ring and mouth are evenly spaced.
  const std::size_t ring = n * 2 / 5;
  const std::size_t eye = n * 3 / 20;
  const std::size_t mouth = n - ring - 2 * eye;
  constexpr double kEyeSpread = 0.06;
  constexpr double kMouthFrom = 200.0 * std::numbers::pi / 180.0;
  constexpr double kMouthTo = 340.0 * std::numbers::pi / 180.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = 0.0;
    double y = 0.0;
    int part = 0;
    if (i < ring) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring);
      x = std::cos(t);
      y = std::sin(t);
      part = 0;
    } else if (i < ring + 2 * eye) {
      const bool left = i < ring + eye;
      x = (left ? -0.35 : 0.35) + kEyeSpread * blob(rng);
      y = 0.35 + kEyeSpread * blob(rng);
      part = left ? 1 : 2;
    } else {
      const std::size_t k = i - ring - 2 * eye;
      const double t = kMouthFrom + (kMouthTo - kMouthFrom) * static_cast<double>(k) /
                                        static_cast<double>(std::max<std::size_t>(mouth - 1, 1));
      x = 0.5 * std::cos(t);
      y = 0.5 * std::sin(t) - 0.05;
      part = 3;
    }
    s.points(i, 0) = x;
    s.points(i, 1) = y;
    (*s.truth)[i] = part;
  }
  add_noise(s.points, sigma, rng);
  return s;
}

SampleSet gen_blobs(std::size_t n, const std::vector<std::pair<double, double>>& centers,
                    double sigma, std::uint64_t seed) {
  if (centers.empty()) throw std::invalid_argument("gen_blobs: no centers");
  require_count(n, 1, "gen_blobs");
  std::mt19937_64 rng(seed);
  SampleSet s{PointMatrix(n, 2), std::vector<int>(n), two_d_names()};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % centers.size();
    s.points(i, 0) = centers[c].first;
    s.points(i, 1) = centers[c].second;
    (*s.truth)[i] = static_cast<int>(c);
  }
  add_noise(s.points, sigma, rng);
  return s;
}

// --- CSV -------------------------------------------------------------------

namespace {

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += ch;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::optional<double> parse_number(const std::string& cell) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_index(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

SampleSet parse_csv(const std::string& text, const CsvOptions& options) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> header;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto cells = split_record(line);
    for (auto& c : cells) c = trim(std::move(c));
    if (first && options.has_header) {
      header = std::move(cells);
    } else {
      records.push_back(std::move(cells));
    }
    first = false;
  }
  if (records.empty()) throw std::invalid_argument("csv: no data rows");

  const std::size_t width = options.has_header ? header.size() : records.front().size();
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw std::invalid_argument("csv: row " + std::to_string(r) + " has " +
                                  std::to_string(records[r].size()) + " fields, expected " +
                                  std::to_string(width));
    }
  }

  std::optional<std::size_t> label_col;
  if (options.label_column) {
    const auto named = std::find(header.begin(), header.end(), *options.label_column);
    if (named != header.end()) {
      label_col = static_cast<std::size_t>(named - header.begin());
    } else if (auto idx = parse_index(*options.label_column)) {
      label_col = *idx;
    }
    if (!label_col || *label_col >= width) {
      throw std::invalid_argument("csv: label column '" + *options.label_column + "' not found");
    }
  }

  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < width; ++c) {
    if (c != label_col) feature_cols.push_back(c);
  }
  if (feature_cols.empty()) throw std::invalid_argument("csv: no feature columns");

  SampleSet s;
  s.points = PointMatrix(records.size(), feature_cols.size());
  for (std::size_t f = 0; f < feature_cols.size(); ++f) {
    s.names.push_back(options.has_header ? header[feature_cols[f]]
                                         : "c" + std::to_string(feature_cols[f]));
  }

  for (std::size_t f = 0; f < feature_cols.size(); ++f) {
    const std::size_t c = feature_cols[f];
    std::vector<bool> missing(records.size(), false);
    double sum = 0.0;
    std::size_t present = 0;
    for (std::size_t r = 0; r < records.size(); ++r) {
      const std::string& cell = records[r][c];
      if (cell.empty()) {
        missing[r] = true;
        continue;
      }
      const auto v = parse_number(cell);
      if (!v) {
        throw std::invalid_argument("csv: non-numeric value '" + cell + "' at row " +
                                    std::to_string(r) + ", column " + std::to_string(c));
      }
      s.points(r, f) = *v;
      sum += *v;
      ++present;
    }
    if (present == 0) {
      throw std::invalid_argument("csv: column " + std::to_string(c) + " has no values");
    }
    const double mean = sum / static_cast<double>(present);
    for (std::size_t r = 0; r < records.size(); ++r) {
      if (missing[r]) s.points(r, f) = mean;
    }
  }

  if (label_col) {
    // Integer labels are kept as-is; anything else is numbered by first appearance.
    std::vector<int> truth(records.size());
    bool all_int = true;
    for (std::size_t r = 0; r < records.size(); ++r) {
      const std::string& cell = records[r][*label_col];
      int v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || v < 0) {
        all_int = false;
        break;
      }
      truth[r] = v;
    }
    if (!all_int) {
      std::map<std::string, int> ids;
      for (std::size_t r = 0; r < records.size(); ++r) {
        const std::string& cell = records[r][*label_col];
        if (cell.empty()) throw std::invalid_argument("csv: missing label at row " + std::to_string(r));
        truth[r] = ids.try_emplace(cell, static_cast<int>(ids.size())).first->second;
      }
    }
    s.truth = std::move(truth);
  }
  return s;
}

SampleSet load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), options);
}

void standardize(PointMatrix& points) {
  const std::size_t n = points.rows();
  if (n == 0) return;
  for (std::size_t l = 0; l < points.cols(); ++l) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += points(i, l);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (points(i, l) - mean) * (points(i, l) - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      points(i, l) = sd > 0.0 ? (points(i, l) - mean) / sd : points(i, l) - mean;
    }
  }
}

// --- images ----------------------------------------------------------------

ImageFrame make_image(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw std::invalid_argument("image must have at least one pixel");
  return ImageFrame{width, height, std::vector<double>(width * height * 3, 0.0)};
}

SampleSet image_to_samples(const ImageFrame& image) {
  SampleSet s;
  s.points = PointMatrix(image.width * image.height, 5);
  s.names = {"r", "g", "b", "x", "y"};
  for (std::size_t y = 0; y < image.height; ++y) {
    for (std::size_t x = 0; x < image.width; ++x) {
      auto row = s.points.row(y * image.width + x);
      row[0] = image.at(x, y, 0);
      row[1] = image.at(x, y, 1);
      row[2] = image.at(x, y, 2);
      row[3] = static_cast<double>(x);
      row[4] = static_cast<double>(y);
    }
  }
  return s;
}

namespace {

constexpr std::uint32_t kMask24 = 0xFFFFFF;
constexpr std::uint32_t kMulA = 0x9E3779 | 1;  // odd, hence invertible mod 2^24
constexpr std::uint32_t kMulB = 0x85EBCB | 1;

constexpr std::uint32_t inverse_mod24(std::uint32_t a) {
  std::uint32_t x = a;  // Newton iteration: each step doubles the correct low bits
  for (int i = 0; i < 5; ++i) x = (x * (2u - a * x)) & kMask24;
  return x;
}

constexpr std::uint32_t mix24(std::uint32_t x) {
  x = (x * kMulA) & kMask24;
  x ^= x >> 12;
  x = (x * kMulB) & kMask24;
  return x;
}

constexpr std::uint32_t unmix24(std::uint32_t x) {
  x = (x * inverse_mod24(kMulB)) & kMask24;
  x ^= x >> 12;
  x = (x * inverse_mod24(kMulA)) & kMask24;
  return x;
}

static_assert(unmix24(mix24(12345)) == 12345);

}  // namespace

std::uint32_t label_color(int label) {
  if (label < 0) return kNoiseColor;
  if (static_cast<std::uint32_t>(label) >= kMask24) throw std::out_of_range("label too large");
  const std::uint32_t c = mix24(static_cast<std::uint32_t>(label) + 1);
  if (c == kNoiseColor) throw std::out_of_range("label collides with the noise color");
  return c;
}

int color_label(std::uint32_t color) {
  if (color == kNoiseColor) return kNoiseLabel;
  return static_cast<int>(unmix24(color & kMask24)) - 1;
}

ImageFrame labels_to_image(std::span<const int> labels, std::size_t width, std::size_t height) {
  if (labels.size() != width * height) {
    throw std::invalid_argument("label count does not match image size");
  }
  ImageFrame img = make_image(width, height);
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const std::uint32_t c = label_color(labels[p]);
    img.rgb[p * 3 + 0] = static_cast<double>((c >> 16) & 0xFF);
    img.rgb[p * 3 + 1] = static_cast<double>((c >> 8) & 0xFF);
    img.rgb[p * 3 + 2] = static_cast<double>(c & 0xFF);
  }
  return img;
}

}  // namespace gdt
