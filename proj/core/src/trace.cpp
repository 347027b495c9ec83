#include "mobsim/trace.hpp"

#include <stdexcept>
#include <string>

namespace mobsim {

void Trace::record(double t, std::vector<NodeState> states) {
  if (states.empty()) {
    throw std::invalid_argument("trace: snapshot must contain at least one node");
  }
  if (!snapshots_.empty()) {
    double last = snapshots_.back().t;
    if (!(t > last)) {
      throw std::invalid_argument("trace: snapshot time " + std::to_string(t) +
                                  " does not follow " + std::to_string(last));
    }
    const auto& first = snapshots_.front().states;
    if (states.size() != first.size()) {
      throw std::invalid_argument("trace: snapshot node count changed");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].id != first[i].id) {
        throw std::invalid_argument("trace: snapshot node ids changed");
      }
    }
  }
  snapshots_.push_back({t, std::move(states)});
}

}  // namespace mobsim
