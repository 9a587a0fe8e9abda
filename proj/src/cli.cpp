#include "nustab/cli.hpp"

namespace nustab {

int run_cli(const std::vector<std::string>&, std::ostream&, std::ostream& err)
{
  err << "not wired up yet\n";
  return 2;
}

}  // namespace nustab
