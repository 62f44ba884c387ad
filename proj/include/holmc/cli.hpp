#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holmc {

/* Runs one toolkit command; args without the program name. Returns the
 * process exit code: 0 success, 1 runtime or verification failure, 2 usage
 * or input syntax errors. */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace holmc
