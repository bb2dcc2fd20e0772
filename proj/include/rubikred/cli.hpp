#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it in-process.
//
// Exit codes: 0 ok, 1 answer "no" (no path / no solution / rejected),
// 2 usage, 3 schema or promise violation, 4 capacity exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace rubikred {

enum ExitCode : int { kExitOk = 0, kExitNo = 1, kExitUsage = 2, kExitSchema = 3, kExitCapacity = 4 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rubikred
