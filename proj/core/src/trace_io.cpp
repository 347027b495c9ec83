#include "mobsim/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobsim {
namespace {

constexpr const char* kCsvHeader = "t,id,x,y,speed,heading";

std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

std::string_view next_line(std::string_view& text) {
  std::size_t newline = text.find('\n');
  std::string_view line = newline == std::string_view::npos ? text : text.substr(0, newline);
  text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

double parse_field(std::string_view field, int line_number) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("trace line " + std::to_string(line_number) +
                                ": invalid number '" + std::string(field) + "'");
  }
  return out;
}

std::string export_csv(const Trace& trace) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const Snapshot& snap : trace.snapshots()) {
    std::string t = format_value(snap.t);
    for (const NodeState& node : snap.states) {
      out += t;
      out += ',';
      out += std::to_string(node.id);
      out += ',';
      out += format_value(node.position.x);
      out += ',';
      out += format_value(node.position.y);
      out += ',';
      out += format_value(node.velocity.speed);
      out += ',';
      out += format_value(node.velocity.heading);
      out += '\n';
    }
  }
  return out;
}

Trace parse_csv(std::string_view text) {
  std::string_view header = next_line(text);
  if (header != kCsvHeader) {
    throw std::invalid_argument("trace: expected CSV header '" + std::string(kCsvHeader) + "'");
  }
  Trace trace;
  std::vector<NodeState> pending;
  bool have_t = false;
  double current_t = 0.0;
  int line_number = 1;
  while (!text.empty()) {
    std::string_view line = next_line(text);
    ++line_number;
    if (line.empty()) continue;
    double fields[5];
    int id = 0;
    std::size_t field_index = 0;
    std::size_t numeric_index = 0;
    std::string_view rest = line;
    while (true) {
      std::size_t comma = rest.find(',');
      std::string_view field = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      if (field_index == 1) {
        id = static_cast<int>(parse_field(field, line_number));
      } else {
        if (numeric_index >= 5) {
          throw std::invalid_argument("trace line " + std::to_string(line_number) +
                                      ": expected 6 fields");
        }
        fields[numeric_index++] = parse_field(field, line_number);
      }
      ++field_index;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (field_index != 6) {
      throw std::invalid_argument("trace line " + std::to_string(line_number) +
                                  ": expected 6 fields");
    }
    double t = fields[0];
    if (have_t && t != current_t) {
      trace.record(current_t, std::move(pending));
      pending.clear();
    }
    current_t = t;
    have_t = true;
    NodeState node;
    node.id = id;
    node.position = {fields[1], fields[2]};
    node.velocity = {fields[3], fields[4]};
    pending.push_back(node);
  }
  if (have_t) trace.record(current_t, std::move(pending));
  if (trace.empty()) throw std::invalid_argument("trace: no data rows");
  return trace;
}

std::string export_ns2(const Trace& trace) {
  const std::vector<Snapshot>& snaps = trace.snapshots();
  char header[128];
  std::snprintf(header, sizeof(header), "# mobsim ns2 trace snapshots=%zu dt=%.17g t0=%.17g\n",
                snaps.size(),
                snaps.size() > 1 ? snaps[1].t - snaps[0].t : 0.0, snaps[0].t);
  std::string out = header;
  for (const NodeState& node : snaps.front().states) {
    std::string id = std::to_string(node.id);
    out += "$node_(" + id + ") set X_ " + format_value(node.position.x) + "\n";
    out += "$node_(" + id + ") set Y_ " + format_value(node.position.y) + "\n";
  }
  for (std::size_t s = 0; s + 1 < snaps.size(); ++s) {
    double interval = snaps[s + 1].t - snaps[s].t;
    std::string at = format_value(snaps[s].t);
    for (std::size_t i = 0; i < snaps[s].states.size(); ++i) {
      const NodeState& now = snaps[s].states[i];
      const NodeState& then = snaps[s + 1].states[i];
      double hop = distance(now.position, then.position);
      if (hop == 0.0) continue;  // resting interval, no movement command
      out += "$ns_ at " + at + " \"\\$node_(" + std::to_string(now.id) + ") setdest " +
             format_value(then.position.x) + " " + format_value(then.position.y) + " " +
             format_value(hop / interval) + "\"\n";
    }
  }
  return out;
}

Trace parse_ns2(std::string_view text) {
  struct Dest {
    double x = 0.0;
    double y = 0.0;
    double speed = 0.0;
  };
  std::map<int, Position> initial;
  std::map<double, std::map<int, Dest>> schedule;
  bool have_header = false;
  unsigned long long header_snapshots = 0;
  double header_dt = 0.0;
  double header_t0 = 0.0;

  int line_number = 0;
  while (!text.empty()) {
    std::string_view raw = next_line(text);
    ++line_number;
    if (raw.empty()) continue;
    std::string line(raw);
    // Tcl-escaped inner $node_ references normalise to the plain form.
    for (std::size_t pos = line.find("\\$"); pos != std::string::npos; pos = line.find("\\$")) {
      line.erase(pos, 1);
    }
    if (line[0] == '#') {
      unsigned long long snaps = 0;
      double dt = 0.0;
      double t0 = 0.0;
      if (std::sscanf(line.c_str(), "# mobsim ns2 trace snapshots=%llu dt=%lf t0=%lf", &snaps,
                      &dt, &t0) == 3) {
        have_header = true;
        header_snapshots = snaps;
        header_dt = dt;
        header_t0 = t0;
      }
      continue;
    }
    int id = 0;
    double value = 0.0;
    double at = 0.0;
    Dest dest;
    if (std::sscanf(line.c_str(), "$node_(%d) set X_ %lf", &id, &value) == 2) {
      initial[id].x = value;
    } else if (std::sscanf(line.c_str(), "$node_(%d) set Y_ %lf", &id, &value) == 2) {
      initial[id].y = value;
    } else if (std::sscanf(line.c_str(), "$ns_ at %lf \"$node_(%d) setdest %lf %lf %lf\"", &at,
                           &id, &dest.x, &dest.y, &dest.speed) == 5) {
      schedule[at][id] = dest;
    } else {
      throw std::invalid_argument("trace line " + std::to_string(line_number) +
                                  ": unrecognised ns2 statement '" + line + "'");
    }
  }
  if (initial.empty()) {
    throw std::invalid_argument("trace: ns2 input has no initial positions");
  }

  std::vector<double> times;
  if (have_header) {
    if (header_snapshots == 0) throw std::invalid_argument("trace: ns2 header says 0 snapshots");
    times.reserve(header_snapshots);
    for (unsigned long long i = 0; i < header_snapshots; ++i) {
      times.push_back(header_t0 + static_cast<double>(i) * header_dt);
    }
  } else {
    for (const auto& [t, moves] : schedule) times.push_back(t);
    if (times.empty()) {
      times.push_back(0.0);
    } else {
      // The final snapshot closes the last movement interval; without a
      // header its time is taken as one more uniform spacing.
      double spacing = times.size() > 1 ? times.back() - times[times.size() - 2] : 1.0;
      times.push_back(times.back() + spacing);
    }
  }

  // Printed command times can differ from the reconstructed snapshot grid by
  // rounding, so commands attach to the nearest snapshot within a quarter of
  // the grid spacing rather than by exact equality.
  std::vector<std::map<int, Dest>> moves_at(times.size());
  double spacing = times.size() > 1 ? times[1] - times[0] : 1.0;
  for (const auto& [t, moves] : schedule) {
    auto it = std::lower_bound(times.begin(), times.end(), t);
    std::size_t idx;
    if (it == times.begin()) {
      idx = 0;
    } else if (it == times.end()) {
      idx = times.size() - 1;
    } else {
      std::size_t hi = static_cast<std::size_t>(it - times.begin());
      idx = (*it - t <= t - times[hi - 1]) ? hi : hi - 1;
    }
    if (std::abs(times[idx] - t) > spacing / 4.0 || idx + 1 >= times.size()) {
      throw std::invalid_argument("trace: setdest scheduled at time " + format_value(t) +
                                  " which is not a snapshot time");
    }
    for (const auto& [id, dest] : moves) moves_at[idx][id] = dest;
  }

  std::map<int, Velocity> velocities;
  for (const auto& [id, pos] : initial) velocities[id] = Velocity{};
  std::map<int, Position> positions = initial;
  Trace trace;
  for (std::size_t k = 0; k < times.size(); ++k) {
    std::vector<NodeState> states;
    states.reserve(positions.size());
    for (const auto& [id, pos] : positions) {
      NodeState node;
      node.id = id;
      node.position = pos;
      node.velocity = velocities[id];
      states.push_back(node);
    }
    trace.record(times[k], std::move(states));
    if (k + 1 == times.size()) break;
    for (auto& [id, vel] : velocities) vel.speed = 0.0;
    for (const auto& [id, dest] : moves_at[k]) {
      auto pos = positions.find(id);
      if (pos == positions.end()) {
        throw std::invalid_argument("trace: setdest names unknown node " + std::to_string(id));
      }
      velocities[id] = velocity_from_displacement(
          {dest.x - pos->second.x, dest.y - pos->second.y}, times[k + 1] - times[k],
          velocities[id].heading);
      velocities[id].speed = dest.speed;
      pos->second = {dest.x, dest.y};
    }
  }
  return trace;
}

}  // namespace

std::string export_trace(const Trace& trace, TraceFormat format) {
  if (trace.empty()) {
    throw std::invalid_argument("export_trace: trace must not be empty");
  }
  return format == TraceFormat::CsvTrace ? export_csv(trace) : export_ns2(trace);
}

Trace parse_trace(std::string_view text, TraceFormat format) {
  return format == TraceFormat::CsvTrace ? parse_csv(text) : parse_ns2(text);
}

TraceFormat detect_trace_format(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    std::string_view line = next_line(rest);
    if (line.empty()) continue;
    if (line[0] == '#' || line[0] == '$') return TraceFormat::Ns2Movement;
    if (line.starts_with("t,id,")) return TraceFormat::CsvTrace;
    break;
  }
  throw std::invalid_argument("trace: unrecognised format (expected CSV header or ns2 lines)");
}

}  // namespace mobsim
