#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <string>

namespace dsem {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitResidualFailure = 1, kExitUsage = 2, kExitDomain = 3 };

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "a..b" or a single integer "a". Throws std::invalid_argument.
IntRange parse_int_range(const std::string& s);

/// "a..b" or "a,b". Throws std::invalid_argument.
std::array<double, 2> parse_real_range(const std::string& s);

/// "x", "x,y" or "(x,y)". Throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& s);

/// Entry point shared by the executable and the tests; argv[0] is ignored.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dsem
