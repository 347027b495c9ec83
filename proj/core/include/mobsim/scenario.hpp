#pragma once

#include <cstdint>
#include <vector>

#include "mobsim/mobility.hpp"
#include "mobsim/trace.hpp"

namespace mobsim {

/// One experiment description: the model under test, where and how long it
/// runs, and the sweep axes used by the table and fitting workflows.
struct ScenarioConfig {
  std::vector<int> node_counts{50, 100, 150, 200, 250, 300};
  std::vector<double> speeds = default_speeds();
  ModelConfig model;
  Area area;
  SimulationClock clock;
  std::uint64_t seed = 1;
  double radio_range = 250.0;  // metres
  double sigma = 0.5;          // truncated-Gaussian speed sampler width, m/s
  double scaling = 100.0;      // k-to-alpha multiplier used by the fit workflow

  /// 0.1, 0.2, ..., 1.0 m/s.
  static std::vector<double> default_speeds();
};

/// Throws std::invalid_argument naming the offending field. Lists must be
/// non-empty and strictly increasing; scalars positive.
void validate(const ScenarioConfig& config);

/// Runs one simulation with the first entry of node_counts. Node ids are
/// 0..n-1, initial positions uniform over the area; the t = 0 snapshot holds
/// that placement at zero speed and each of clock.steps ticks appends one
/// snapshot, so the trace has steps + 1 entries.
Trace run_simulation(const ScenarioConfig& config);

/// Per-node time-averaged recorded speed divided by n, in node order. The
/// t = 0 snapshot is excluded from the average since nothing has moved yet.
/// Throws std::invalid_argument when n does not match the trace.
std::vector<double> empirical_speed_ratio(const Trace& trace, int n);

}  // namespace mobsim
