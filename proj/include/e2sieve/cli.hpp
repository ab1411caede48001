#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace e2sieve {

/// Runs the command line front end. `args` excludes the program name.
/// Returns 0 on success or a positive verdict, 1 for a non-positive
/// verdict and 2 on any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e2sieve
