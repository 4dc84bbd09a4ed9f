#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colorfan {

/// Command-line front end. Exit codes: 0 success, 1 verification failure,
/// 2 input error, 3 internal-consistency failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace colorfan
