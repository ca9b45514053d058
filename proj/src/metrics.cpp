#include "gdt/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace gdt {

Contingency Contingency::build(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("prediction and truth lengths differ");
  }
  std::map<int, std::size_t> rows;
  std::map<int, std::size_t> cols;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] < 0) continue;
    rows.try_emplace(predicted[i], 0);
    cols.try_emplace(truth[i], 0);
  }
  std::size_t r = 0;
  for (auto& [label, idx] : rows) idx = r++;
  std::size_t c = 0;
  for (auto& [label, idx] : cols) idx = c++;

  Contingency t;
  t.counts.assign(rows.size(), std::vector<std::size_t>(cols.size(), 0));
  t.cluster_sizes.assign(rows.size(), 0);
  t.class_sizes.assign(cols.size(), 0);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] < 0) continue;
    const std::size_t a = rows.at(predicted[i]);
    const std::size_t b = cols.at(truth[i]);
    ++t.counts[a][b];
    ++t.cluster_sizes[a];
    ++t.class_sizes[b];
    ++t.covered;
  }
  if (t.covered == 0) throw std::invalid_argument("empty evaluation set");
  return t;
}

std::size_t max_assignment(const std::vector<std::vector<std::size_t>>& counts) {
  if (counts.empty() || counts.front().empty()) return 0;
  // Hungarian method (potentials form) minimizing (top - count), rows <= cols.
  const bool transpose = counts.size() > counts.front().size();
  const std::size_t n = transpose ? counts.front().size() : counts.size();
  const std::size_t m = transpose ? counts.size() : counts.front().size();
  auto at = [&](std::size_t i, std::size_t j) {
    return transpose ? counts[j][i] : counts[i][j];
  };
  std::size_t top = 0;
  for (const auto& row : counts) top = std::max(top, *std::max_element(row.begin(), row.end()));
  auto cost = [&](std::size_t i, std::size_t j) {
    return static_cast<double>(top) - static_cast<double>(at(i, j));
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0);  // owner[j]: row matched to column j (1-based)
  std::vector<std::size_t> way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::size_t total = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) total += at(owner[j] - 1, j - 1);
  }
  return total;
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  const Contingency t = Contingency::build(predicted, truth);
  return static_cast<double>(max_assignment(t.counts)) / static_cast<double>(t.covered);
}

double fscore(std::span<const int> predicted, std::span<const int> truth) {
  const Contingency t = Contingency::build(predicted, truth);
  double total = 0.0;
  for (std::size_t c = 0; c < t.class_sizes.size(); ++c) {
    double best = 0.0;
    for (std::size_t k = 0; k < t.cluster_sizes.size(); ++k) {
      const auto overlap = static_cast<double>(t.counts[k][c]);
      if (overlap == 0.0) continue;
      const double precision = overlap / static_cast<double>(t.cluster_sizes[k]);
      const double recall = overlap / static_cast<double>(t.class_sizes[c]);
      best = std::max(best, 2.0 * precision * recall / (precision + recall));
    }
    total += static_cast<double>(t.class_sizes[c]) / static_cast<double>(t.covered) * best;
  }
  return total;
}

namespace {

double pairs_of(std::size_t x) {
  const auto v = static_cast<double>(x);
  return v * (v - 1.0) / 2.0;
}

// Same partition up to relabeling: each row and each column of the
// contingency has exactly one non-zero cell.
bool same_partition(const Contingency& t) {
  std::vector<std::size_t> col_hits(t.class_sizes.size(), 0);
  for (const auto& row : t.counts) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 0) continue;
      ++hits;
      ++col_hits[c];
    }
    if (hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](std::size_t h) { return h == 1; });
}

}  // namespace

double ari(std::span<const int> predicted, std::span<const int> truth) {
  const Contingency t = Contingency::build(predicted, truth);
  double index = 0.0;
  for (const auto& row : t.counts) {
    for (std::size_t x : row) index += pairs_of(x);
  }
  double row_pairs = 0.0;
  for (std::size_t a : t.cluster_sizes) row_pairs += pairs_of(a);
  double col_pairs = 0.0;
  for (std::size_t b : t.class_sizes) col_pairs += pairs_of(b);

  const double total_pairs = pairs_of(t.covered);
  const double expected = total_pairs > 0.0 ? row_pairs * col_pairs / total_pairs : 0.0;
  const double max_index = 0.5 * (row_pairs + col_pairs);
  const double denom = max_index - expected;
  if (denom == 0.0) return same_partition(t) ? 1.0 : 0.0;
  return (index - expected) / denom;
}

double coverage(std::span<const int> predicted) {
  if (predicted.empty()) throw std::invalid_argument("coverage of an empty labeling");
  const auto covered = std::count_if(predicted.begin(), predicted.end(), [](int l) { return l >= 0; });
  return static_cast<double>(covered) / static_cast<double>(predicted.size());
}

}  // namespace gdt
