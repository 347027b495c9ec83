#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mobsim/types.hpp"

namespace mobsim {

/// Undirected proximity graph: two nodes share an edge when their distance is
/// at most radio_range (boundary inclusive). No self-edges.
class NeighborGraph {
 public:
  /// Throws std::invalid_argument on duplicate ids or non-positive range.
  NeighborGraph(std::span<const std::pair<int, Position>> nodes, double radio_range);

  double radio_range() const { return range_; }
  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const;
  bool has_edge(int a, int b) const;
  std::size_t degree(int id) const;
  /// Neighbor ids of one node, ascending. Throws std::out_of_range on an
  /// unknown id, as do the other per-node accessors.
  const std::vector<int>& neighbors(int id) const;
  /// All node ids, ascending.
  const std::vector<int>& ids() const { return ids_; }

 private:
  std::size_t index_of(int id) const;

  double range_ = 0.0;
  std::vector<int> ids_;
  std::vector<std::vector<int>> adjacency_;
};

inline NeighborGraph neighbor_graph(std::span<const std::pair<int, Position>> nodes,
                                    double radio_range) {
  return NeighborGraph(nodes, radio_range);
}

/// Watts-Strogatz local coefficient: realised edges among the node's
/// neighbors over deg*(deg-1)/2 possible ones. Degree 0 or 1 scores 0.
double clustering_coefficient(const NeighborGraph& graph, int node_id);

}  // namespace mobsim
