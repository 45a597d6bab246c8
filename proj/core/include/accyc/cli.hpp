#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace accyc {

/// Dispatch one CLI invocation (argv without the program name).
/// Exit status: 0 all requested checks pass, 1 check failure, 2 usage or
/// input error. Reports are deterministic for fixed inputs and seeds.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accyc
