#include "mobsim/neighbor_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mobsim {

NeighborGraph::NeighborGraph(std::span<const std::pair<int, Position>> nodes,
                             double radio_range)
    : range_(radio_range) {
  if (!(std::isfinite(radio_range) && radio_range > 0.0)) {
    throw std::invalid_argument("neighbor graph: radio_range must be positive");
  }
  std::vector<std::pair<int, Position>> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      throw std::invalid_argument("neighbor graph: duplicate node id " +
                                  std::to_string(sorted[i].first));
    }
  }
  ids_.reserve(sorted.size());
  for (const auto& [id, pos] : sorted) ids_.push_back(id);
  adjacency_.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (distance(sorted[i].second, sorted[j].second) <= range_) {
        adjacency_[i].push_back(ids_[j]);
        adjacency_[j].push_back(ids_[i]);
      }
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::size_t NeighborGraph::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw std::out_of_range("neighbor graph: unknown node id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t NeighborGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

bool NeighborGraph::has_edge(int a, int b) const {
  const std::vector<int>& list = adjacency_[index_of(a)];
  index_of(b);  // reject unknown ids symmetrically
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t NeighborGraph::degree(int id) const { return adjacency_[index_of(id)].size(); }

const std::vector<int>& NeighborGraph::neighbors(int id) const {
  return adjacency_[index_of(id)];
}

double clustering_coefficient(const NeighborGraph& graph, int node_id) {
  const std::vector<int>& around = graph.neighbors(node_id);
  std::size_t deg = around.size();
  if (deg < 2) return 0.0;
  std::size_t linked = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    for (std::size_t j = i + 1; j < deg; ++j) {
      if (graph.has_edge(around[i], around[j])) ++linked;
    }
  }
  return static_cast<double>(linked) / (static_cast<double>(deg) * (deg - 1) / 2.0);
}

}  // namespace mobsim
