#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncat::cli {

  // Runs one invocation. args excludes the program name. Exit codes: 0 all
  // checks pass, 1 a check failed, 2 usage or input error, 3 a limit was hit.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ncat::cli
