#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exactcat::cli {

enum ExitCode : int { Success = 0, Refuted = 1, InputError = 2, Undecided = 3 };

/// Runs one command line (without the program name) and returns its exit
/// code. Results go to out, diagnostics to err.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exactcat::cli
