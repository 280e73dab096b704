#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incmon::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kSyntaxError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// INCMON_MAX_DEGREE, default 16.
int max_degree();

}  // namespace incmon::cli
