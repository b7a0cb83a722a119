#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdp {

// args = argv without the program name. Returns the process exit code:
// 0 success, 1 domain or input error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tdp
