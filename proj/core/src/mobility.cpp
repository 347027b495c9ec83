#include "mobsim/mobility.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "mobsim/motion.hpp"

namespace mobsim {

void validate(const MobilityParams& params) {
  if (!(std::isfinite(params.v_min) && params.v_min >= 0.0)) {
    throw std::invalid_argument("mobility params: v_min must be non-negative");
  }
  if (!(std::isfinite(params.v_max) && params.v_max > 0.0)) {
    throw std::invalid_argument("mobility params: v_max must be positive");
  }
  if (params.v_min > params.v_max) {
    throw std::invalid_argument("mobility params: v_min exceeds v_max");
  }
  if (!(std::isfinite(params.pause_time_max) && params.pause_time_max >= 0.0)) {
    throw std::invalid_argument("mobility params: pause_time_max must be non-negative");
  }
  if (!(std::isfinite(params.leg_value) && params.leg_value > 0.0)) {
    throw std::invalid_argument("mobility params: leg_value must be positive");
  }
  if (!(std::isfinite(params.step_magnitude) && params.step_magnitude > 0.0)) {
    throw std::invalid_argument("mobility params: step_magnitude must be positive");
  }
  if (!(params.pursue_gain > 0.0 && params.pursue_gain <= 1.0)) {
    throw std::invalid_argument("mobility params: pursue_gain must lie in (0, 1]");
  }
  if (!(std::isfinite(params.pursue_noise_max) && params.pursue_noise_max >= 0.0)) {
    throw std::invalid_argument("mobility params: pursue_noise_max must be non-negative");
  }
}

TransitionMatrix TransitionMatrix::validated(const Rows& rows) {
  for (std::size_t r = 0; r < 3; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
      double p = rows[r][c];
      if (!(std::isfinite(p) && p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("transition matrix entry (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") = " + std::to_string(p) +
                                    " is outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("transition matrix row " + std::to_string(r) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
  }
  return TransitionMatrix(rows);
}

const TransitionMatrix& TransitionMatrix::forward_biased() {
  static const TransitionMatrix instance = validated(Rows{{
      {{0.0, 0.5, 0.5}},
      {{0.3, 0.7, 0.0}},
      {{0.3, 0.0, 0.7}},
  }});
  return instance;
}

AxisState TransitionMatrix::sample_next(AxisState from, Rng& rng) const {
  const auto& row = rows_[static_cast<int>(from)];
  double u = rng.uniform01();
  // Cumulative comparison keeps zero entries exactly unreachable (u >= 0).
  if (u < row[0]) return AxisState::Current;
  if (u < row[0] + row[1]) return AxisState::Previous;
  return AxisState::Next;
}

namespace {

void fold_into_area(NodeState& node, const Area& area) {
  BoundaryResult folded = apply_boundary(node.position, node.velocity.heading, area);
  node.position = folded.position;
  node.velocity.heading = folded.heading;
}

// Picks a fresh waypoint with speed on (0, v_max]. Travel starts next tick.
void retarget(NodeState& node, const MobilityParams& params, const Area& area, Rng& rng) {
  Position waypoint{rng.uniform(0.0, area.width), rng.uniform(0.0, area.height)};
  double speed = params.v_max * (1.0 - rng.uniform01());
  node.memory = WaypointTarget{waypoint};
  node.velocity.speed = speed;
  node.velocity.heading = normalize_heading(
      std::atan2(waypoint.y - node.position.y, waypoint.x - node.position.x));
  node.phase = Phase::Moving;
  node.pause_remaining = 0.0;
}

}  // namespace

NodeState random_walk_step(const NodeState& node, const MobilityParams& params,
                           const Area& area, const SimulationClock& clock, Rng& rng) {
  validate(params);
  validate(clock);
  NodeState out = node;
  const WalkLeg* leg = std::get_if<WalkLeg>(&out.memory);
  if (leg == nullptr || leg->remaining <= 0.0) {
    out.velocity.speed = rng.uniform(params.v_min, params.v_max);
    out.velocity.heading = rng.uniform(0.0, kTwoPi);
    out.memory = WalkLeg{params.leg_value};
  }
  out = advance(out, clock.dt);
  fold_into_area(out, area);
  double spent =
      params.leg_mode == LegMode::ConstantDuration ? clock.dt : out.velocity.speed * clock.dt;
  std::get<WalkLeg>(out.memory).remaining -= spent;
  out.phase = Phase::Moving;
  return out;
}

NodeState random_waypoint_step(const NodeState& node, const MobilityParams& params,
                               const Area& area, const SimulationClock& clock, Rng& rng) {
  validate(params);
  validate(area);
  validate(clock);
  NodeState out = node;
  if (out.phase == Phase::Paused) {
    out.pause_remaining -= clock.dt;
    if (out.pause_remaining <= 0.0) retarget(out, params, area, rng);
    return out;
  }
  const WaypointTarget* target = std::get_if<WaypointTarget>(&out.memory);
  if (target == nullptr) {
    retarget(out, params, area, rng);
    return out;
  }
  Position waypoint = target->waypoint;
  double gap = distance(out.position, waypoint);
  double travel = out.velocity.speed * clock.dt;
  if (gap <= travel) {
    out.position = waypoint;
    if (params.pause_time_max > 0.0) {
      out.phase = Phase::Paused;
      out.pause_remaining = rng.uniform(0.0, params.pause_time_max);
      out.velocity.speed = 0.0;
    } else {
      retarget(out, params, area, rng);
    }
    return out;
  }
  out.velocity.heading = normalize_heading(
      std::atan2(waypoint.y - out.position.y, waypoint.x - out.position.x));
  out = advance(out, clock.dt);
  fold_into_area(out, area);
  return out;
}

NodeState probabilistic_walk_step(const NodeState& node, const TransitionMatrix& matrix,
                                  const MobilityParams& params, const Area& area,
                                  const SimulationClock& clock, Rng& rng) {
  validate(params);
  validate(area);
  validate(clock);
  NodeState out = node;
  AxisWalkState axes;
  if (const AxisWalkState* held = std::get_if<AxisWalkState>(&out.memory)) axes = *held;
  axes.x = matrix.sample_next(axes.x, rng);
  axes.y = matrix.sample_next(axes.y, rng);
  out.memory = axes;
  auto offset = [&params](AxisState s) {
    if (s == AxisState::Next) return params.step_magnitude;
    if (s == AxisState::Previous) return -params.step_magnitude;
    return 0.0;
  };
  Vec2 displacement{offset(axes.x), offset(axes.y)};
  out.position.x += displacement.x;
  out.position.y += displacement.y;
  out.velocity = velocity_from_displacement(displacement, clock.dt, out.velocity.heading);
  fold_into_area(out, area);
  out.phase = Phase::Moving;
  return out;
}

Position pursue_update(Position old_position, Position target, double gain, Vec2 noise) {
  return {old_position.x + gain * (target.x - old_position.x) + noise.x,
          old_position.y + gain * (target.y - old_position.y) + noise.y};
}

NodeState pursue_step(const NodeState& node, Position target, const MobilityParams& params,
                      const Area& area, const SimulationClock& clock, Rng& rng) {
  validate(params);
  validate(area);
  validate(clock);
  NodeState out = node;
  Vec2 noise{rng.uniform(-params.pursue_noise_max, params.pursue_noise_max),
             rng.uniform(-params.pursue_noise_max, params.pursue_noise_max)};
  Position next = pursue_update(out.position, target, params.pursue_gain, noise);
  out.velocity = velocity_from_displacement(
      {next.x - out.position.x, next.y - out.position.y}, clock.dt, out.velocity.heading);
  out.position = next;
  fold_into_area(out, area);
  out.phase = Phase::Moving;
  out.memory = std::monostate{};
  return out;
}

std::vector<NodeState> step_network(const std::vector<NodeState>& nodes, const ModelConfig& model,
                                    const Area& area, const SimulationClock& clock, Rng& rng) {
  if (nodes.empty()) {
    throw std::invalid_argument("step_network: network must contain at least one node");
  }
  std::vector<NodeState> out;
  out.reserve(nodes.size());
  switch (model.kind) {
    case ModelKind::RandomWalk:
      for (const NodeState& n : nodes) {
        out.push_back(random_walk_step(n, model.params, area, clock, rng));
      }
      break;
    case ModelKind::RandomWaypoint:
      for (const NodeState& n : nodes) {
        out.push_back(random_waypoint_step(n, model.params, area, clock, rng));
      }
      break;
    case ModelKind::ProbabilisticWalk:
      for (const NodeState& n : nodes) {
        out.push_back(probabilistic_walk_step(n, model.matrix, model.params, area, clock, rng));
      }
      break;
    case ModelKind::Pursue: {
      // Pursuers chase where the target stood at the start of the tick.
      Position previous_target = nodes.front().position;
      out.push_back(random_walk_step(nodes.front(), model.params, area, clock, rng));
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        out.push_back(pursue_step(nodes[i], previous_target, model.params, area, clock, rng));
      }
      break;
    }
  }
  return out;
}

}  // namespace mobsim
