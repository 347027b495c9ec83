#pragma once

#include <string>
#include <string_view>

#include "mobsim/trace.hpp"

namespace mobsim {

enum class TraceFormat { CsvTrace, Ns2Movement };

/// Serialises a trace. CsvTrace is one row per (t, node) under the header
/// "t,id,x,y,speed,heading". Ns2Movement writes initial "set X_/Y_" lines and
/// then time-sorted setdest commands, preceded by a comment header carrying
/// the snapshot grid; ns-2 ignores comments. Throws std::invalid_argument on
/// an empty trace.
std::string export_trace(const Trace& trace, TraceFormat format);

/// Rebuilds a trace from exported text. Positions survive either format to
/// within 1e-9 m. CsvTrace restores velocities exactly; Ns2Movement does not
/// store resting headings, so velocities there are reconstructed from the
/// movement commands. Throws std::invalid_argument on malformed input.
Trace parse_trace(std::string_view text, TraceFormat format);

/// Tells the two formats apart from the first non-blank line.
TraceFormat detect_trace_format(std::string_view text);

}  // namespace mobsim
