#include "mobsim/config.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace mobsim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + message);
}

double parse_double(std::string_view value, int line, const std::string& key) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    fail(line, "invalid number '" + std::string(value) + "' for key '" + key + "'");
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view value, int line, const std::string& key) {
  Int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    fail(line, "invalid integer '" + std::string(value) + "' for key '" + key + "'");
  }
  return out;
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  while (true) {
    std::size_t comma = value.find(',');
    if (comma == std::string_view::npos) {
      items.push_back(trim(value));
      break;
    }
    items.push_back(trim(value.substr(0, comma)));
    value.remove_prefix(comma + 1);
  }
  return items;
}

ModelKind parse_model(std::string_view value, int line) {
  if (value == "random_walk") return ModelKind::RandomWalk;
  if (value == "random_waypoint") return ModelKind::RandomWaypoint;
  if (value == "probabilistic_walk") return ModelKind::ProbabilisticWalk;
  if (value == "pursue") return ModelKind::Pursue;
  fail(line, "unknown model '" + std::string(value) +
                 "' (expected random_walk, random_waypoint, probabilistic_walk, or pursue)");
}

BoundaryPolicy parse_boundary(std::string_view value, int line) {
  if (value == "reflect") return BoundaryPolicy::Reflect;
  if (value == "wrap") return BoundaryPolicy::Wrap;
  if (value == "clamp") return BoundaryPolicy::Clamp;
  fail(line, "unknown boundary '" + std::string(value) + "' (expected reflect, wrap, or clamp)");
}

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::RandomWalk: return "random_walk";
    case ModelKind::RandomWaypoint: return "random_waypoint";
    case ModelKind::ProbabilisticWalk: return "probabilistic_walk";
    case ModelKind::Pursue: return "pursue";
  }
  return "random_waypoint";
}

const char* boundary_name(BoundaryPolicy policy) {
  switch (policy) {
    case BoundaryPolicy::Reflect: return "reflect";
    case BoundaryPolicy::Wrap: return "wrap";
    case BoundaryPolicy::Clamp: return "clamp";
  }
  return "reflect";
}

std::string full_precision(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig config;
  int line_number = 0;
  while (!text.empty() || line_number == 0) {
    std::size_t newline = text.find('\n');
    std::string_view raw = newline == std::string_view::npos ? text : text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    ++line_number;
    std::string_view line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (text.empty()) break;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_number, "expected 'key = value', got '" + std::string(line) + "'");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) fail(line_number, "missing value for key '" + key + "'");

    if (key == "nodes") {
      config.node_counts.clear();
      for (std::string_view item : split_list(value)) {
        config.node_counts.push_back(parse_int<int>(item, line_number, key));
      }
    } else if (key == "speeds") {
      config.speeds.clear();
      for (std::string_view item : split_list(value)) {
        config.speeds.push_back(parse_double(item, line_number, key));
      }
    } else if (key == "model") {
      config.model.kind = parse_model(value, line_number);
    } else if (key == "area_width") {
      config.area.width = parse_double(value, line_number, key);
    } else if (key == "area_height") {
      config.area.height = parse_double(value, line_number, key);
    } else if (key == "boundary") {
      config.area.boundary = parse_boundary(value, line_number);
    } else if (key == "dt") {
      config.clock.dt = parse_double(value, line_number, key);
    } else if (key == "steps") {
      config.clock.steps = parse_int<long>(value, line_number, key);
    } else if (key == "seed") {
      config.seed = parse_int<std::uint64_t>(value, line_number, key);
    } else if (key == "radio_range") {
      config.radio_range = parse_double(value, line_number, key);
    } else if (key == "v_min") {
      config.model.params.v_min = parse_double(value, line_number, key);
    } else if (key == "v_max") {
      config.model.params.v_max = parse_double(value, line_number, key);
    } else if (key == "pause_max") {
      config.model.params.pause_time_max = parse_double(value, line_number, key);
    } else if (key == "pursue_gain") {
      config.model.params.pursue_gain = parse_double(value, line_number, key);
    } else if (key == "pursue_noise") {
      config.model.params.pursue_noise_max = parse_double(value, line_number, key);
    } else if (key == "sigma") {
      config.sigma = parse_double(value, line_number, key);
    } else if (key == "scaling") {
      config.scaling = parse_double(value, line_number, key);
    } else {
      fail(line_number, "unknown key '" + key + "'");
    }
  }
  if (config.model.params.v_min > config.model.params.v_max) {
    throw std::invalid_argument(
        "config: v_min = " + full_precision(config.model.params.v_min) +
        " exceeds v_max = " + full_precision(config.model.params.v_max));
  }
  // The probabilistic-walk step size is not a config key; it follows the
  // configured speed range and tick length.
  config.model.params.step_magnitude =
      0.5 * (config.model.params.v_min + config.model.params.v_max) * config.clock.dt;
  validate(config);
  return config;
}

std::string emit_config(const ScenarioConfig& config) {
  std::string out;
  out += "nodes = ";
  for (std::size_t i = 0; i < config.node_counts.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(config.node_counts[i]);
  }
  out += "\nspeeds = ";
  for (std::size_t i = 0; i < config.speeds.size(); ++i) {
    if (i > 0) out += ", ";
    out += full_precision(config.speeds[i]);
  }
  out += "\nmodel = ";
  out += model_name(config.model.kind);
  out += "\narea_width = " + full_precision(config.area.width);
  out += "\narea_height = " + full_precision(config.area.height);
  out += "\nboundary = ";
  out += boundary_name(config.area.boundary);
  out += "\ndt = " + full_precision(config.clock.dt);
  out += "\nsteps = " + std::to_string(config.clock.steps);
  out += "\nseed = " + std::to_string(config.seed);
  out += "\nradio_range = " + full_precision(config.radio_range);
  out += "\nv_min = " + full_precision(config.model.params.v_min);
  out += "\nv_max = " + full_precision(config.model.params.v_max);
  out += "\npause_max = " + full_precision(config.model.params.pause_time_max);
  out += "\npursue_gain = " + full_precision(config.model.params.pursue_gain);
  out += "\npursue_noise = " + full_precision(config.model.params.pursue_noise_max);
  out += "\nsigma = " + full_precision(config.sigma);
  out += "\nscaling = " + full_precision(config.scaling);
  out += "\n";
  return out;
}

}  // namespace mobsim
