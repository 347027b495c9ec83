#pragma once

#include "mobsim/types.hpp"

namespace mobsim {

/// Result of folding a position back into the area. Reflection can change the
/// heading; the other policies leave it untouched.
struct BoundaryResult {
  Position position;
  double heading = 0.0;
};

/// Applies the area's boundary policy to a possibly-outside position.
/// Reflect mirrors the offending coordinate and reverses that heading
/// component, Wrap is toroidal, Clamp pins to the nearest edge. The returned
/// position always lies inside the area.
BoundaryResult apply_boundary(Position position, double heading, const Area& area);

/// Translates a node along its velocity for dt seconds. No boundary handling;
/// callers fold the result back into the area themselves.
/// Throws std::invalid_argument on non-finite state, negative speed, or dt <= 0.
NodeState advance(const NodeState& node, double dt);

}  // namespace mobsim
