#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbgeo::cli {

/// Runs one command. args excludes the program name. Data goes to out (or
/// the --output file), diagnostics to err. Exit codes: 0 success, 1 usage,
/// malformed input or internal error, 2 domain or infeasible input,
/// 3 certification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sbgeo::cli
