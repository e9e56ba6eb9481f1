#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxsurf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kVerificationFailed = 4,
  kIo = 5,
};

/// Runs the command line (args excludes the program name). Normal output goes to
/// out unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "NXxNY".
bool parse_grid(const std::string& s, int& nx, int& ny);
/// Parses "x0:x1:y0:y1".
bool parse_bounds(const std::string& s, double& x0, double& x1, double& y0, double& y1);

/// Energies reproduced by the figures command, in output order.
const std::vector<double>& figure_energies();
/// v0 used for a figure energy: acosh(-E)/2 below -1, else 0.
double figure_v0(double E);

}  // namespace maxsurf::cli
