#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace archcat::cli {

// Runs one command (argv without the program name) and writes the report to
// `out`, diagnostics to `err`. Returns the exit status: 0 when the queried
// property holds or the input is valid, 1 when it fails, 2 on input or
// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archcat::cli
