#pragma once

#include <iostream>
#include <ostream>

namespace fastgym {

// Entry point of the `fastgym` tool. Returns 0 on success, 1 on a runtime
// failure and 2 on bad command-line usage.
int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace fastgym
