#include "mobsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mobsim {

double speed_correlation(Vec2 v1, Vec2 v2, Vec2 v1_next) {
  double n1 = norm(v1);
  double n2 = norm(v2);
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::domain_error("speed_correlation: undefined for zero-magnitude velocity");
  }
  return dot(v1, v2) / (n1 * n2) * (norm(v1_next) / n2);
}

double cosine_similarity(Vec2 v1, Vec2 v2) {
  double n1 = norm(v1);
  double n2 = norm(v2);
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::domain_error("cosine_similarity: undefined for zero-magnitude velocity");
  }
  return std::clamp(dot(v1, v2) / (n1 * n2), -1.0, 1.0);
}

SpeedCorrelationSummary mean_speed_correlation(const Trace& trace, std::size_t lag) {
  if (lag == 0) {
    throw std::invalid_argument("mean_speed_correlation: lag must be at least one step");
  }
  if (trace.size() <= lag) {
    throw std::invalid_argument("mean_speed_correlation: trace shorter than lag");
  }
  SpeedCorrelationSummary out;
  double sum = 0.0;
  for (std::size_t t = 0; t + lag < trace.size(); ++t) {
    const std::vector<NodeState>& now = trace.at(t).states;
    const std::vector<NodeState>& next = trace.at(t + lag).states;
    for (std::size_t i = 0; i < now.size(); ++i) {
      for (std::size_t j = 0; j < now.size(); ++j) {
        if (i == j) continue;
        if (now[i].velocity.speed == 0.0 || now[j].velocity.speed == 0.0) {
          ++out.pairs_skipped;
          continue;
        }
        sum += speed_correlation(to_vector(now[i].velocity), to_vector(now[j].velocity),
                                 to_vector(next[i].velocity));
        ++out.pairs_used;
      }
    }
  }
  if (out.pairs_used == 0) {
    throw std::domain_error("mean_speed_correlation: every pair has a zero-speed endpoint");
  }
  out.mean = sum / static_cast<double>(out.pairs_used);
  return out;
}

double distance_correlation(const Trace& trace, std::size_t lag, double k) {
  if (lag == 0) {
    throw std::invalid_argument("distance_correlation: lag must be at least one step");
  }
  if (trace.size() <= lag) {
    throw std::invalid_argument("distance_correlation: trace shorter than lag");
  }
  if (trace.node_count() < 2) {
    throw std::invalid_argument("distance_correlation: needs at least two nodes");
  }
  double total = 0.0;
  std::size_t windows = 0;
  for (std::size_t t = 0; t + lag < trace.size(); ++t) {
    const std::vector<NodeState>& now = trace.at(t).states;
    const std::vector<NodeState>& later = trace.at(t + lag).states;
    double diameter = 0.0;
    for (std::size_t i = 0; i < now.size(); ++i) {
      for (std::size_t j = i + 1; j < now.size(); ++j) {
        diameter = std::max(diameter, distance(now[i].position, now[j].position));
      }
    }
    if (diameter == 0.0) {
      throw std::domain_error("distance_correlation: all nodes coincide, diameter is zero");
    }
    double moved = 0.0;
    for (std::size_t i = 0; i < now.size(); ++i) {
      moved += distance(later[i].position, now[i].position);
    }
    total += moved / diameter;
    ++windows;
  }
  return k * (total / static_cast<double>(windows));
}

double speed_ratio(double speed, int node_count) {
  if (node_count <= 0) {
    throw std::invalid_argument("speed_ratio: node count must be positive");
  }
  if (!(std::isfinite(speed) && speed >= 0.0)) {
    throw std::invalid_argument("speed_ratio: speed must be non-negative");
  }
  return speed / static_cast<double>(node_count);
}

double k_factor(std::span<const double> ratios) {
  if (ratios.empty()) {
    throw std::invalid_argument("k_factor: ratio list must not be empty");
  }
  auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return std::abs(*hi - *lo);
}

}  // namespace mobsim
