#pragma once

#include <array>
#include <vector>

#include "mobsim/rng.hpp"
#include "mobsim/types.hpp"

namespace mobsim {

enum class LegMode { ConstantDuration, ConstantDistance };

/// Knobs shared by the mobility models; each model reads the subset it needs.
struct MobilityParams {
  double v_min = 0.1;                           // m/s
  double v_max = 1.0;                           // m/s
  double pause_time_max = 10.0;                 // random waypoint, seconds
  LegMode leg_mode = LegMode::ConstantDuration;
  double leg_value = 10.0;                      // seconds or metres, matching leg_mode
  double step_magnitude = 0.55;                 // probabilistic walk, metres per tick
  double pursue_gain = 0.5;                     // fraction of the gap closed per tick
  double pursue_noise_max = 1.0;                // per-axis noise bound, metres
};

/// Throws std::invalid_argument naming the offending field.
void validate(const MobilityParams& params);

/// Row-stochastic 3x3 matrix over AxisState. Constructed through validation
/// only, so an instance in hand is always well-formed.
class TransitionMatrix {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  /// Accepts iff every entry is in [0, 1] and each row sums to 1 within 1e-12.
  /// Throws std::invalid_argument naming the offending row or entry.
  static TransitionMatrix validated(const Rows& rows);

  /// Default walk behaviour: from rest, stepping back or forward are equally
  /// likely; once moving, keep direction with probability 0.7, never reverse.
  static const TransitionMatrix& forward_biased();

  double prob(AxisState from, AxisState to) const {
    return rows_[static_cast<int>(from)][static_cast<int>(to)];
  }
  AxisState sample_next(AxisState from, Rng& rng) const;
  const Rows& rows() const { return rows_; }

 private:
  explicit TransitionMatrix(const Rows& rows) : rows_(rows) {}
  Rows rows_;
};

inline TransitionMatrix validate_transition_matrix(const TransitionMatrix::Rows& rows) {
  return TransitionMatrix::validated(rows);
}

enum class ModelKind { RandomWalk, RandomWaypoint, ProbabilisticWalk, Pursue };

struct ModelConfig {
  ModelKind kind = ModelKind::RandomWaypoint;
  MobilityParams params;
  TransitionMatrix matrix = TransitionMatrix::forward_biased();
};

/// One tick of the memoryless walk: draws a fresh uniform speed and heading
/// whenever the current leg (constant duration or constant distance) is spent,
/// then advances and folds back into the area.
NodeState random_walk_step(const NodeState& node, const MobilityParams& params,
                           const Area& area, const SimulationClock& clock, Rng& rng);

/// One tick of the waypoint model: paused nodes count down; expiry or first
/// use picks a destination uniform over the area with speed uniform on
/// (0, v_max]; moving nodes head for the waypoint and snap onto it when one
/// tick's travel covers the remaining gap, then pause for U[0, pause_time_max]
/// (a zero pause_time_max re-targets immediately instead).
NodeState random_waypoint_step(const NodeState& node, const MobilityParams& params,
                               const Area& area, const SimulationClock& clock, Rng& rng);

/// One tick of the matrix-driven walk: each axis independently samples its
/// next state from the row of its current state and moves by +step, -step, or
/// not at all.
NodeState probabilistic_walk_step(const NodeState& node, const TransitionMatrix& matrix,
                                  const MobilityParams& params, const Area& area,
                                  const SimulationClock& clock, Rng& rng);

/// Pure position update for the pursue rule, exposed so the arithmetic can be
/// checked without a random stream:
/// new = old + gain * (target - old) + noise.
Position pursue_update(Position old_position, Position target, double gain, Vec2 noise);

/// One tick of the pursue model: closes a gain fraction of the gap to the
/// target position plus per-axis uniform noise on [-noise_max, noise_max].
NodeState pursue_step(const NodeState& node, Position target, const MobilityParams& params,
                      const Area& area, const SimulationClock& clock, Rng& rng);

/// Advances every node one tick under the selected model. For Pursue the
/// front node (lowest id) roams by random walk and the rest chase its
/// previous-tick position. Throws std::invalid_argument on an empty network.
std::vector<NodeState> step_network(const std::vector<NodeState>& nodes, const ModelConfig& model,
                                    const Area& area, const SimulationClock& clock, Rng& rng);

}  // namespace mobsim
