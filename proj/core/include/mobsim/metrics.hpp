#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mobsim/trace.hpp"
#include "mobsim/types.hpp"

namespace mobsim {

/// Velocity co-movement of two nodes: the cosine between v1 and v2 scaled by
/// the ratio of node 1's next speed to node 2's speed. Deliberately unbounded;
/// cosine_similarity below is the bounded diagnostic variant.
/// Throws std::domain_error when v1 or v2 has zero magnitude.
double speed_correlation(Vec2 v1, Vec2 v2, Vec2 v1_next);

/// Plain cosine similarity of two nonzero vectors, always in [-1, 1].
double cosine_similarity(Vec2 v1, Vec2 v2);

struct SpeedCorrelationSummary {
  double mean = 0.0;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;  // pairs with a zero-speed endpoint
};

/// Averages speed_correlation over every ordered node pair at every snapshot
/// that has a successor `lag` steps later. Zero-speed pairs are skipped and
/// counted; throws std::domain_error when nothing is usable.
SpeedCorrelationSummary mean_speed_correlation(const Trace& trace, std::size_t lag);

/// Mean over time windows of the per-node displacement sum across `lag`
/// steps, normalised by the maximum pairwise distance at the window start and
/// scaled by k. Throws std::domain_error when all nodes coincide.
double distance_correlation(const Trace& trace, std::size_t lag, double k);

/// Speed scaled down by network size. Throws on node_count <= 0 or negative speed.
double speed_ratio(double speed, int node_count);

/// Spread of a ratio column: max minus min. Throws on an empty list.
double k_factor(std::span<const double> ratios);

struct SpeedRatioGrid {
  std::vector<int> node_counts;             // ascending
  std::vector<double> speeds;               // ascending
  std::vector<std::vector<double>> ratios;  // [node-count index][speed index]
};

struct KFactorRow {
  int node_count = 0;
  double y_min = 0.0;
  double y_max = 0.0;
  double k = 0.0;
};

}  // namespace mobsim
