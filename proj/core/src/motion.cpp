#include "mobsim/motion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mobsim {
namespace {

// Folds x into [0, length] as a triangle wave. flipped reports whether an odd
// number of wall crossings occurred, i.e. whether travel along this axis
// reversed direction.
double reflect_axis(double x, double length, bool& flipped) {
  double period = 2.0 * length;
  double m = std::fmod(x, period);
  if (m < 0.0) m += period;
  if (m > length) {
    flipped = true;
    return period - m;
  }
  flipped = false;
  return m;
}

double wrap_axis(double x, double length) {
  double m = std::fmod(x, length);
  if (m < 0.0) m += length;
  return m;
}

}  // namespace

BoundaryResult apply_boundary(Position position, double heading, const Area& area) {
  validate(area);
  BoundaryResult out{position, heading};
  switch (area.boundary) {
    case BoundaryPolicy::Reflect: {
      bool flip_x = false;
      bool flip_y = false;
      out.position.x = reflect_axis(position.x, area.width, flip_x);
      out.position.y = reflect_axis(position.y, area.height, flip_y);
      if (flip_x || flip_y) {
        double h = heading;
        if (flip_x) h = std::numbers::pi - h;
        if (flip_y) h = -h;
        out.heading = normalize_heading(h);
      }
      break;
    }
    case BoundaryPolicy::Wrap:
      out.position.x = wrap_axis(position.x, area.width);
      out.position.y = wrap_axis(position.y, area.height);
      break;
    case BoundaryPolicy::Clamp:
      out.position.x = std::clamp(position.x, 0.0, area.width);
      out.position.y = std::clamp(position.y, 0.0, area.height);
      break;
  }
  return out;
}

NodeState advance(const NodeState& node, double dt) {
  if (!(std::isfinite(dt) && dt > 0.0)) {
    throw std::invalid_argument("advance: dt must be positive and finite");
  }
  if (!std::isfinite(node.position.x) || !std::isfinite(node.position.y) ||
      !std::isfinite(node.velocity.speed) || !std::isfinite(node.velocity.heading)) {
    throw std::invalid_argument("advance: node state must be finite");
  }
  if (node.velocity.speed < 0.0) {
    throw std::invalid_argument("advance: speed must be non-negative");
  }
  NodeState out = node;
  double step = node.velocity.speed * dt;
  out.position.x += step * std::cos(node.velocity.heading);
  out.position.y += step * std::sin(node.velocity.heading);
  return out;
}

}  // namespace mobsim
