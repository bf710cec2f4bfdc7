// Self-check harness behind `treebal verify`.

#ifndef TREEBAL_TOOLS_VERIFY_HPP_
#define TREEBAL_TOOLS_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace treebal::cli {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  // First counterexample, empty when passed.
  std::string detail;
};

struct VerifyOptions {
  std::uint32_t max_n_enum = 16;
  std::uint64_t max_n_formula = 4096;
  // Enumeration guard; 0 means enumeration_limit().
  std::uint32_t enum_limit = 0;
};

// Runs every check; max_n_enum must already be within the enumeration guard.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace treebal::cli

#endif  // TREEBAL_TOOLS_VERIFY_HPP_
