#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kschmidt::cli {

/// Parses argv, runs one subcommand and writes its report. Returns the
/// process exit code: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kschmidt::cli
