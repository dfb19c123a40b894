#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qomat {

// Dispatches one CLI invocation (args exclude the program name).
// Exit codes: 0 success / verification PASS, 1 verification FAIL,
// 2 usage, parse, or domain errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qomat
