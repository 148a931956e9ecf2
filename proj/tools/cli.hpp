#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtoda::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kEvalError = 2;
inline constexpr int kConfigError = 3;

// Runs the command line; output goes to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// worker count from RTODA_THREADS, defaulting to the hardware concurrency
int thread_count();

}  // namespace rtoda::cli
