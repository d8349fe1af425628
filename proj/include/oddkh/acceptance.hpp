#pragma once

// The acceptance suite: ten end-to-end checks over the diagram corpus and
// random instances. Shared by the acceptance binary and `oddkh selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace oddkh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, std::uint64_t seed = 1);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1);

/// "PASS  3 invariance (0.41s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace oddkh
