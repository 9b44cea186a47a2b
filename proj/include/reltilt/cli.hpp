#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reltilt {

// Exit codes of the command line tool.
enum ExitCode : int { kPass = 0, kFalsified = 1, kInputError = 2, kCapRefusal = 3 };

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reltilt
