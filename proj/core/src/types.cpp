#include "mobsim/types.hpp"

#include <stdexcept>

namespace mobsim {

void validate(const Area& area) {
  if (!(std::isfinite(area.width) && area.width > 0.0)) {
    throw std::invalid_argument("area width must be positive and finite");
  }
  if (!(std::isfinite(area.height) && area.height > 0.0)) {
    throw std::invalid_argument("area height must be positive and finite");
  }
}

void validate(const SimulationClock& clock) {
  if (!(std::isfinite(clock.dt) && clock.dt > 0.0)) {
    throw std::invalid_argument("clock dt must be positive and finite");
  }
  if (clock.steps <= 0) {
    throw std::invalid_argument("clock steps must be positive");
  }
}

}  // namespace mobsim
