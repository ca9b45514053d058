#pragma once

// Slow reference implementations used as test oracles. They share no code
// with the library beyond the PointMatrix container.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gdt/point_matrix.hpp"

namespace oracle {

using gdt::PointMatrix;

struct Hit {
  int id;
  double distance;
};

inline double dist2(const PointMatrix& p, std::size_t i, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t l = 0; l < p.cols(); ++l) s += (p(i, l) - q[l]) * (p(i, l) - q[l]);
  return s;
}

// Full scan, sort by (squared distance, id), keep k.
inline std::vector<Hit> knn(const PointMatrix& p, std::span<const double> q, std::size_t k) {
  std::vector<std::pair<double, int>> all;
  for (std::size_t i = 0; i < p.rows(); ++i) all.emplace_back(dist2(p, i, q), static_cast<int>(i));
  std::sort(all.begin(), all.end());
  all.resize(std::min(k, all.size()));
  std::vector<Hit> out;
  for (const auto& [d2, id] : all) out.push_back({id, std::sqrt(d2)});
  return out;
}

inline double kernel(const PointMatrix& p, std::size_t i, std::size_t j,
                     const std::vector<double>& h) {
  double prod = 1.0;
  for (std::size_t l = 0; l < p.cols(); ++l) {
    const double u = (p(i, l) - p(j, l)) / h[l];
    prod *= std::exp(-0.5 * u * u);
  }
  return prod;
}

// Global KDE over every sample, no normalizing constant.
inline std::vector<double> global_kde(const PointMatrix& p, const std::vector<double>& h) {
  std::vector<double> out(p.rows(), 0.0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.rows(); ++j) out[i] += kernel(p, i, j, h);
  }
  return out;
}

// Local KDE over the brute-force k nearest neighbors.
inline std::vector<double> local_kde(const PointMatrix& p, const std::vector<double>& h,
                                     std::size_t k) {
  std::vector<double> out(p.rows(), 0.0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (const Hit& nb : knn(p, p.row(i), k)) out[i] += kernel(p, i, static_cast<std::size_t>(nb.id), h);
  }
  return out;
}

struct Growth {
  std::vector<int> parent;
  std::vector<int> root;  // -1 noise
  std::set<std::tuple<int, int, int, int>> pairs;  // (later, earlier, later root, earlier root)
};

// Quadratic growth: explicit sort, brute-force neighborhoods.
inline Growth grow(const PointMatrix& p, const std::vector<double>& f, std::size_t ks,
                   double eps) {
  const std::size_t n = p.rows();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] > f[b];
    return a < b;
  });
  std::vector<std::vector<Hit>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) nbrs[i] = knn(p, p.row(i), ks);
  auto in_knn = [&](int a, int b) {
    for (const Hit& h : nbrs[a]) {
      if (h.id == b) return true;
    }
    return false;
  };

  Growth g;
  g.parent.assign(n, -1);
  g.root.assign(n, -1);
  std::vector<bool> done(n, false);
  for (const int i : order) {
    int best = -1;
    double best_slope = -std::numeric_limits<double>::infinity();
    for (const Hit& h : nbrs[i]) {
      if (!done[h.id]) continue;
      const double slope = h.distance == 0.0 ? std::numeric_limits<double>::infinity()
                                             : (f[h.id] - f[i]) / h.distance;
      if (best == -1 || slope > best_slope || (slope == best_slope && h.id < best)) {
        best = h.id;
        best_slope = slope;
      }
    }
    done[i] = true;
    if (best == -1) {
      g.parent[i] = i;
      g.root[i] = i;
      continue;
    }
    g.parent[i] = best;
    const int r = g.root[best];
    if (r < 0) continue;
    const double ratio = f[r] > 0.0 ? f[i] / f[r] : 1.0;
    if (ratio < eps) continue;
    g.root[i] = r;
    for (const Hit& h : nbrs[i]) {
      if (h.id == i || g.root[h.id] < 0 || !done[h.id]) continue;
      if (g.root[h.id] == r || !in_knn(h.id, i)) continue;
      g.pairs.insert({i, h.id, r, g.root[h.id]});
    }
  }
  return g;
}

// Adjusted Rand index by direct enumeration of all point pairs.
inline double pair_counting_ari(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  double both = 0, in_a = 0, in_b = 0, total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      both += sa && sb;
      in_a += sa;
      in_b += sb;
      total += 1;
    }
  }
  const double expected = in_a * in_b / total;
  const double max_index = 0.5 * (in_a + in_b);
  if (max_index == expected) return a == b ? 1.0 : 0.0;
  return (both - expected) / (max_index - expected);
}

// Best cluster-to-class matching by trying every injective map.
inline double brute_accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
  std::vector<int> clusters, classes;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] < 0) continue;
    clusters.push_back(pred[i]);
    classes.push_back(truth[i]);
  }
  std::vector<int> cu(clusters), tu(classes);
  std::sort(cu.begin(), cu.end());
  cu.erase(std::unique(cu.begin(), cu.end()), cu.end());
  std::sort(tu.begin(), tu.end());
  tu.erase(std::unique(tu.begin(), tu.end()), tu.end());
  // Pad the class list so every cluster can be mapped to "nothing".
  std::vector<int> targets(tu);
  while (targets.size() < cu.size()) targets.push_back(std::numeric_limits<int>::min());
  std::sort(targets.begin(), targets.end());
  std::size_t best = 0;
  do {
    std::map<int, int> to;
    for (std::size_t c = 0; c < cu.size(); ++c) to[cu[c]] = targets[c];
    std::size_t hit = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) hit += to[clusters[i]] == classes[i];
    best = std::max(best, hit);
  } while (std::next_permutation(targets.begin(), targets.end()));
  return static_cast<double>(best) / static_cast<double>(clusters.size());
}

inline PointMatrix uniform_points(std::size_t n, std::size_t d, std::uint64_t seed,
                                  double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  PointMatrix p(n, d);
  for (double& v : p.data()) v = u(rng);
  return p;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("gdt_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
