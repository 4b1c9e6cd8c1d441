#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagkey::cli {

// Runs one CLI invocation. Returns 0 on success, 1 on validation errors,
// 2 when --assert-positive is set and the expansion is not key positive.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace flagkey::cli
