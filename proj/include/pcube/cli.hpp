#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcube {

/// Runs the `pcube` command line on `args` (without the program name).
/// Returns 0 on success, 1 when the inspected property fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pcube
