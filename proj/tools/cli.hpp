#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levrecon::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Parses args (without the program name), runs one subcommand and writes its
/// document to out.  Errors become a JSON {"error": ...} document on out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace levrecon::cli
