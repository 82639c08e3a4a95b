#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vgt {

// Runs one CLI invocation. Exit status: 0 success, 2 usage error, 3 domain
// error, 4 precision-cap tie or undetermined digits.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgt
