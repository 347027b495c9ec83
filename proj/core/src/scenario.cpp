#include "mobsim/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace mobsim {

std::vector<double> ScenarioConfig::default_speeds() {
  std::vector<double> speeds;
  speeds.reserve(10);
  for (int i = 1; i <= 10; ++i) speeds.push_back(i / 10.0);
  return speeds;
}

void validate(const ScenarioConfig& config) {
  if (config.node_counts.empty()) {
    throw std::invalid_argument("config: nodes list must not be empty");
  }
  int previous_count = 0;
  for (int n : config.node_counts) {
    if (n <= 0) throw std::invalid_argument("config: node counts must be positive");
    if (n <= previous_count) {
      throw std::invalid_argument("config: node counts must be strictly increasing");
    }
    previous_count = n;
  }
  if (config.speeds.empty()) {
    throw std::invalid_argument("config: speeds list must not be empty");
  }
  double previous_speed = 0.0;
  for (double v : config.speeds) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw std::invalid_argument("config: speeds must be positive");
    }
    if (v <= previous_speed) {
      throw std::invalid_argument("config: speeds must be strictly increasing");
    }
    previous_speed = v;
  }
  validate(config.area);
  validate(config.clock);
  validate(config.model.params);
  if (!(std::isfinite(config.radio_range) && config.radio_range > 0.0)) {
    throw std::invalid_argument("config: radio_range must be positive");
  }
  if (!(std::isfinite(config.sigma) && config.sigma > 0.0)) {
    throw std::invalid_argument("config: sigma must be positive");
  }
  if (!(std::isfinite(config.scaling) && config.scaling > 0.0)) {
    throw std::invalid_argument("config: scaling must be positive");
  }
}

Trace run_simulation(const ScenarioConfig& config) {
  validate(config);
  const int n = config.node_counts.front();
  Rng rng(config.seed);
  std::vector<NodeState> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    NodeState node;
    node.id = i;
    node.position = {rng.uniform(0.0, config.area.width), rng.uniform(0.0, config.area.height)};
    states.push_back(node);
  }
  Trace trace;
  trace.record(0.0, states);
  for (long step = 1; step <= config.clock.steps; ++step) {
    states = step_network(states, config.model, config.area, config.clock, rng);
    trace.record(config.clock.time_at(step), states);
  }
  return trace;
}

std::vector<double> empirical_speed_ratio(const Trace& trace, int n) {
  if (n <= 0) {
    throw std::invalid_argument("empirical_speed_ratio: n must be positive");
  }
  if (trace.empty()) {
    throw std::invalid_argument("empirical_speed_ratio: trace must not be empty");
  }
  if (trace.node_count() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("empirical_speed_ratio: n does not match the trace node count");
  }
  std::vector<double> ratios(trace.node_count(), 0.0);
  if (trace.size() < 2) return ratios;
  for (std::size_t s = 1; s < trace.size(); ++s) {
    const std::vector<NodeState>& states = trace.at(s).states;
    for (std::size_t i = 0; i < states.size(); ++i) {
      ratios[i] += states[i].velocity.speed;
    }
  }
  double samples = static_cast<double>(trace.size() - 1);
  for (double& r : ratios) r = r / samples / static_cast<double>(n);
  return ratios;
}

}  // namespace mobsim
