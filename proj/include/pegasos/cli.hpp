// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pegasos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs the command-line tool. args excludes the program name. Returns the
/// process exit code: 0 success, 2 usage or input error, 3 runtime or
/// numeric error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "v1,v2,..." or "linspace:LO:HI:N". Throws InputError.
std::vector<double> parse_value_list(const std::string& text);

}  // namespace pegasos::cli
