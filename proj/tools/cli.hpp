// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 enumeration size guard exceeded.

#ifndef TREEBAL_TOOLS_CLI_HPP_
#define TREEBAL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace treebal::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kGuardExceeded = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace treebal::cli

#endif  // TREEBAL_TOOLS_CLI_HPP_
