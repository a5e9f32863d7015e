#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace elitist::cli {

// Runs one CLI invocation. args excludes the program name. Results go to
// out (or the --out file), diagnostics to err. Returns the process exit
// code: 0 success, 2 bad arguments, 3 precondition violation, 4 resource
// limit.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elitist::cli
