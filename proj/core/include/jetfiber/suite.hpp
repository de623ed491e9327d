#ifndef JETFIBER_SUITE_HPP
#define JETFIBER_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jetfiber/intersection.hpp"

namespace jetfiber {

enum class CheckStatus { Pass, Fail, SkippedBudget };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  /// Key of the mathematical claim the check reproduces; see `anchor_manifest()`.
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  EvidenceTier tier = EvidenceTier::Symbolic;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckRecord> checks;

  /// No check failed. Budget skips are reported separately, not hidden.
  bool passed() const;
  std::size_t count(CheckStatus s) const;
  void append(const SuiteReport& other);
};

/// Every anchor a complete run must cover (both surfaces plus the center cases).
const std::vector<std::string>& anchor_manifest();

/// Rebuilds the closed sets of the center-component case analysis for p = 3u, q = 2u and checks
/// each stated codimension. Only u = 1 is computed; larger u is reported as skipped-budget.
/// Requires 2p <= m < 2(p + 3).
SuiteReport verify_center_cases(int u, int m, std::uint64_t budget = kDefaultBudget);

/// Every mechanical check for one surface and order m >= 5, in a fixed order.
SuiteReport run_paper_suite(Surface s, int m, std::uint64_t budget = kDefaultBudget);

}  // namespace jetfiber

#endif  // JETFIBER_SUITE_HPP
