#pragma once

// The acceptance suite: ten numbered criteria with pinned sample counts,
// seeds and tolerances.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace angularity {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Criteria to run (1..10); empty means all.
  std::vector<int> only;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  angularity oracle  (12.3 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace angularity
