#pragma once

#include <cstddef>
#include <vector>

#include "mobsim/types.hpp"

namespace mobsim {

struct Snapshot {
  double t = 0.0;
  std::vector<NodeState> states;
};

/// Time-ordered node snapshots from one simulation run. Every snapshot must
/// carry the same node ids in the same order; record() enforces this so
/// metrics can index nodes positionally.
class Trace {
 public:
  /// Appends a snapshot. Throws std::invalid_argument when t does not exceed
  /// the last recorded time, states is empty, or the id sequence differs from
  /// the first snapshot's.
  void record(double t, std::vector<NodeState> states);

  const std::vector<Snapshot>& snapshots() const { return snapshots_; }
  const Snapshot& at(std::size_t i) const { return snapshots_.at(i); }
  std::size_t size() const { return snapshots_.size(); }
  bool empty() const { return snapshots_.empty(); }
  std::size_t node_count() const {
    return snapshots_.empty() ? 0 : snapshots_.front().states.size();
  }

 private:
  std::vector<Snapshot> snapshots_;
};

}  // namespace mobsim
