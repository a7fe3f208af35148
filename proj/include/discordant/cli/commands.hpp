// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discordant::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNonzero = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitAmbiguous = 4;

/// Runs one command. args excludes the program name; input is read for
/// "--input -".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace discordant::cli
