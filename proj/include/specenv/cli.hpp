#pragma once

namespace specenv::cli {

/// Full command line driver; returns the process exit code
/// (0 success, 1 configuration/usage error, 2 numerical failure).
int run(int argc, const char* const* argv);

}  // namespace specenv::cli
