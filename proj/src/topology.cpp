#include "gdt/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gdt/union_find.hpp"

namespace gdt {

const TopoEdge* TopoGraph::find(PointId a, PointId b) const {
  const auto it = edges.find(key(a, b));
  return it == edges.end() ? nullptr : &it->second;
}

std::size_t TopoGraph::kept_edges() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const auto& kv) { return kv.second.kept; }));
}

double peak_modifier(double peak_a, double peak_b) noexcept {
  const double hi = std::max(peak_a, peak_b);
  const double ratio = hi > 0.0 ? std::min(peak_a, peak_b) / hi : 1.0;
  return ratio * ratio;
}

double alpha_from_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be >= 0");
  return 1.0 / (std::sqrt(beta) + 1.0);
}

TopoGraph build_topograph(const GrowthResult& growth, const DensityField& field) {
  if (growth.clusters.empty()) throw std::invalid_argument("growth result has no clusters");
  if (field.index == nullptr) throw std::invalid_argument("density field has no index");
  const PointMatrix& points = field.index->points();
  const std::span<const double> f = field.normalized;

  TopoGraph graph;
  graph.vertices.reserve(growth.clusters.size());
  for (const auto& [root, members] : growth.clusters) {
    graph.vertices.push_back({root, f[static_cast<std::size_t>(root)], members.size()});
    graph.strongest[root] = 0.0;
  }

  std::vector<double> mid(points.cols());
  for (const BoundaryPair& bp : growth.boundary_pairs) {
    if (!growth.clusters.contains(bp.later_root) || !growth.clusters.contains(bp.earlier_root)) {
      throw std::logic_error("boundary pair references unknown cluster (" +
                             std::to_string(bp.later_root) + ", " +
                             std::to_string(bp.earlier_root) + ")");
    }
    const auto a = points.row(static_cast<std::size_t>(bp.later));
    const auto b = points.row(static_cast<std::size_t>(bp.earlier));
    for (std::size_t l = 0; l < mid.size(); ++l) mid[l] = 0.5 * (a[l] + b[l]);
    const double fm = density_at(field, mid);

    auto [it, inserted] = graph.edges.try_emplace(TopoGraph::key(bp.later_root, bp.earlier_root));
    TopoEdge& edge = it->second;
    if (inserted) {
      edge.modifier = peak_modifier(f[static_cast<std::size_t>(bp.later_root)],
                                    f[static_cast<std::size_t>(bp.earlier_root)]);
    }
    edge.weight += fm * fm;
    ++edge.pairs;
  }

  for (auto& [key, edge] : graph.edges) {
    edge.strength = edge.modifier * edge.weight;
    graph.strongest[key.first] = std::max(graph.strongest[key.first], edge.strength);
    graph.strongest[key.second] = std::max(graph.strongest[key.second], edge.strength);
  }
  return graph;
}

TopoGraph prune_edges(const TopoGraph& graph, const PruneConfig& config) {
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in [0, 1]");
  }
  auto relative = [&](PointId v, double strength) {
    const double top = graph.strongest.at(v);
    return top > 0.0 ? strength / top : 1.0;
  };
  TopoGraph pruned = graph;
  for (auto& [key, edge] : pruned.edges) {
    if (!edge.kept) continue;
    if (relative(key.first, edge.strength) < config.alpha ||
        relative(key.second, edge.strength) < config.alpha) {
      edge.kept = false;
    }
  }
  return pruned;
}

Labeling assign_labels(const GrowthResult& growth, const TopoGraph& pruned) {
  std::unordered_map<PointId, std::size_t> slot;
  slot.reserve(pruned.vertices.size());
  for (std::size_t v = 0; v < pruned.vertices.size(); ++v) slot[pruned.vertices[v].root] = v;

  UnionFind components(pruned.vertices.size());
  for (const auto& [key, edge] : pruned.edges) {
    if (edge.kept) components.unite(slot.at(key.first), slot.at(key.second));
  }

  // Vertices are sorted by root id, so first sight of a component is its smallest root.
  std::vector<int> component_label(pruned.vertices.size(), kNoiseLabel);
  std::vector<int> vertex_label(pruned.vertices.size());
  int next = 0;
  for (std::size_t v = 0; v < pruned.vertices.size(); ++v) {
    int& c = component_label[components.find(v)];
    if (c == kNoiseLabel) c = next++;
    vertex_label[v] = c;
  }

  Labeling out;
  out.label.assign(growth.root.size(), kNoiseLabel);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < growth.root.size(); ++i) {
    const PointId r = growth.root[i];
    if (r == kNoise) continue;
    out.label[i] = vertex_label[slot.at(r)];
    ++covered;
  }
  out.num_labels = static_cast<std::size_t>(next);
  out.coverage = growth.root.empty()
                     ? 0.0
                     : static_cast<double>(covered) / static_cast<double>(growth.root.size());
  return out;
}

nlohmann::json topograph_to_json(const TopoGraph& graph) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const TopoVertex& v : graph.vertices) {
    vertices.push_back({{"root", v.root},
                        {"peak_density", v.peak},
                        {"members", v.members},
                        {"strongest", graph.strongest.at(v.root)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [key, e] : graph.edges) {
    edges.push_back({{"i", key.first},
                     {"j", key.second},
                     {"w", e.weight},
                     {"gamma", e.modifier},
                     {"e", e.strength},
                     {"pairs", e.pairs},
                     {"kept", e.kept}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace gdt
