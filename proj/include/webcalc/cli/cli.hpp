#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace webcalc::cli {

enum ExitCode { Ok = 0, ValidationError = 1, FailLines = 2, Irreducible = 3 };

// args excludes the program name.  Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace webcalc::cli
