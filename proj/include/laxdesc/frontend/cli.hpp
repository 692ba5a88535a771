#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laxdesc::frontend {

// Exit codes: 0 the property holds, 1 it fails (report still printed),
// 2 input error. Reports are JSON on out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace laxdesc::frontend
