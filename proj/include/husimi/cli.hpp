#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "husimi/oracle.hpp"

namespace husimi::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// args excludes the program name. Subcommands: eval, grid, verify, figures, spectrum.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The checks behind `verify`, sorted by name.
std::vector<oracle::VerificationReport> verification_suite(const oracle::QuadratureControl& ctl);

/// Grid used by `figures` for one parameter set: [-5,5]^2 with x clipped to (-a, 5].
GridSpec figure_grid(double a, int steps = 201);

}  // namespace husimi::cli
