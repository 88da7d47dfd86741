#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra::cli {

/// Exit codes: 0 ok, 1 counterexample or a "no" under --expect yes, 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace spectra::cli
