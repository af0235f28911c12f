#pragma once
#include <string>
#include <vector>

namespace ga {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool extended = false;
  unsigned long rng_seed = 1;
};

// criteria 1..12; determinism (13) needs two separate processes
constexpr int kLibraryCriteria = 12;
CriterionResult check_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> verify_all(const VerifyOptions& opt = {});
std::string verify_report(const std::vector<CriterionResult>& results);

}  // namespace ga
