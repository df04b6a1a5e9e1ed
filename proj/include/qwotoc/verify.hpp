#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qwotoc/walk_model.hpp"

namespace qwotoc {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string group;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  /// Replaces momentum_block on the block side of the oracle-equivalence
  /// group. Empty means the production eigen-decomposition path.
  std::function<ComplexMatrix(const WalkParams&, std::size_t)> block_override;
};

/// Runs the invariant groups (oracle equivalence, marginal closed forms,
/// Weyl relation, coefficient averages, J0, block-sum exactness, convention
/// robustness, two-level OTOC) plus informational comparison reports.
std::vector<CheckResult> run_verify(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qwotoc
