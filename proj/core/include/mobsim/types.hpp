#pragma once

#include <cmath>
#include <numbers>
#include <variant>

namespace mobsim {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2*pi). Exact multiples of 2*pi map to 0.
inline double normalize_heading(double heading) {
  double h = std::fmod(heading, kTwoPi);
  if (h < 0.0) h += kTwoPi;
  if (h >= kTwoPi) h = 0.0;
  return h;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

struct Position {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Speed in metres per second plus a heading in radians, kept in [0, 2*pi).
struct Velocity {
  double speed = 0.0;
  double heading = 0.0;
};

/// Cartesian form of a velocity.
inline Vec2 to_vector(const Velocity& v) {
  return {v.speed * std::cos(v.heading), v.speed * std::sin(v.heading)};
}

/// Velocity whose speed and heading reproduce the given displacement over dt.
/// A zero displacement keeps fallback_heading so a resting node does not
/// forget which way it was facing.
inline Velocity velocity_from_displacement(Vec2 displacement, double dt, double fallback_heading) {
  double dist = std::hypot(displacement.x, displacement.y);
  if (dist == 0.0) return {0.0, fallback_heading};
  return {dist / dt, normalize_heading(std::atan2(displacement.y, displacement.x))};
}

enum class BoundaryPolicy { Reflect, Wrap, Clamp };

struct Area {
  double width = 1000.0;
  double height = 1000.0;
  BoundaryPolicy boundary = BoundaryPolicy::Reflect;

  bool contains(Position p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
};

/// Throws std::invalid_argument unless both dimensions are positive and finite.
void validate(const Area& area);

enum class Phase { Moving, Paused };

/// Per-axis state of the probabilistic walk.
enum class AxisState : int { Current = 0, Previous = 1, Next = 2 };

/// Remaining budget of the active random-walk leg; seconds or metres
/// depending on MobilityParams::leg_mode.
struct WalkLeg {
  double remaining = 0.0;
};

struct WaypointTarget {
  Position waypoint;
};

struct AxisWalkState {
  AxisState x = AxisState::Current;
  AxisState y = AxisState::Current;
};

/// Model-specific carry-over between ticks. monostate marks a node its model
/// has not initialised yet.
using ModelMemory = std::variant<std::monostate, WalkLeg, WaypointTarget, AxisWalkState>;

struct NodeState {
  int id = 0;
  Position position;
  Velocity velocity;
  Phase phase = Phase::Moving;
  double pause_remaining = 0.0;
  ModelMemory memory;
};

/// Fixed-step clock: tick i corresponds to simulated time i * dt.
struct SimulationClock {
  double dt = 1.0;
  long steps = 900;

  double time_at(long step_index) const { return static_cast<double>(step_index) * dt; }
};

void validate(const SimulationClock& clock);

}  // namespace mobsim
