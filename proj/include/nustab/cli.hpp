#ifndef NUSTAB_CLI_HPP
#define NUSTAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nustab {

/// Dispatches one command line. Returns the process exit status:
/// 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif
