#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hookcsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default sweep parallelism.
inline constexpr const char* kJobsEnv = "HOOKCSP_JOBS";

/// Dispatches a subcommand. argv[0] is the program name.
int run(std::span<const std::string> argv, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace hookcsp::cli
