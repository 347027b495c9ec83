#pragma once

#include <string>
#include <string_view>

#include "mobsim/scenario.hpp"

namespace mobsim {

/// Parses the key = value scenario format ('#' starts a comment, blank lines
/// ignored, lists comma-separated). Unknown keys and malformed values raise
/// std::invalid_argument citing the line number; inconsistent settings raise
/// it naming the keys involved. Missing keys keep their defaults.
ScenarioConfig parse_config(std::string_view text);

/// Inverse of parse_config: emits every key at full precision, so
/// parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const ScenarioConfig& config);

}  // namespace mobsim
