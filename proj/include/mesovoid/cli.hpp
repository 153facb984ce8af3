#pragma once

// Command-line entry point, factored out of main() so tests can drive the
// tool in-process.  Exit codes: 0 success, 2 input error, 3 gate error,
// 4 numerical error.

namespace mesovoid {

int cli_main(int argc, const char* const* argv);

} // namespace mesovoid
