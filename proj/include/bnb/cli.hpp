#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and writes to the given streams, so it can be driven from tests.

#include "bnb/exact.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bnb::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidBroadcast = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistency = 3;

/// "nodes=N,ms=M" with an optional "mode=pruned|enum|restricted"; any
/// subset of keys, the rest keep their defaults. Throws BadSpec.
SolveLimits parse_limits(const std::string &text);

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bnb::cli
