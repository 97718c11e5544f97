#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace godel::cli {

/// Runs the command line given as argv-style arguments (program name
/// excluded). Exit status: 0 success / valid / no countermodel found,
/// 1 invalid or countermodel found, 2 usage or parse error, 3 model budget
/// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Golden corpus: one pass/fail line per item, exit 0 iff all pass.
int run_selftest(std::ostream& out);

}  // namespace godel::cli
