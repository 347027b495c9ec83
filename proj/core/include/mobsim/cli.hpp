#pragma once

namespace mobsim {

/// Entry point behind the mobsim tool; returns the process exit status.
/// Lives in the library so tests can drive the CLI in-process.
int cli_main(int argc, const char* const* argv);

}  // namespace mobsim
