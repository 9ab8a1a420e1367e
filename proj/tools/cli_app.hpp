#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wdiam/error.hpp"

namespace wdiam::cli {

enum ExitCode : int {
  kOk = 0,
  kInput = 2,
  kSolver = 3,
  kOracle = 4,
  kPropertyFailure = 5,
};

int exit_code(Errc code) noexcept;

/// args excludes the program name. `in` backs "-" file arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wdiam::cli
