#pragma once

#include <optional>
#include <string>
#include <vector>

namespace syt {

struct ClaimResult {
  std::string claim_id;
  bool pass = false;
  std::string detail;                  // what was checked, with key numbers
  std::vector<std::string> witnesses;  // offending items on failure, notable pairs on success
  double elapsed_ms = 0.0;
};

/// Registry order of all claim ids.
const std::vector<std::string>& claim_ids();

/// Runs claims in registry order.  With a filter, runs exactly those ids
/// (still in registry order); an unknown id raises InvalidInput naming the
/// known ids.  Results are deterministic apart from elapsed_ms.
std::vector<ClaimResult> run_claims(
    const std::optional<std::vector<std::string>>& only = std::nullopt);

}  // namespace syt
