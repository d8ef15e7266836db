#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellwall {

enum ExitCode { kOk = 0, kUsage = 2, kInfeasible = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ellwall
