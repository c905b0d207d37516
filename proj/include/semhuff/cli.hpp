#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semhuff::cli {

// Runs one subcommand (build | encode | decode | report | verify).
// Returns 0 on success, 1 on validation errors in user data, 2 on I/O,
// format, or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semhuff::cli
