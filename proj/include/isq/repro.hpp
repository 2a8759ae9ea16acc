// Reproduction bundles: each checks one group of published claims and
// reports PASS/FAIL per sub-claim. Shared by `isq repro` and the acceptance
// runner.

#pragma once

#include <string>
#include <vector>

namespace isq {

struct SubClaim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Bundle {
  int criterion = 0;
  std::string id;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<SubClaim> claims;

  [[nodiscard]] bool claims_pass() const;
  /// All sub-claims hold and the run stayed within budget.
  [[nodiscard]] bool pass() const;
};

struct ReproOptions {
  unsigned jobs = 1;
  std::string golden_dir = "tests/golden";
};

struct BundleInfo {
  std::string id;
  int criterion = 0;
  std::string title;
};

/// Known ids in criterion order; `prop13` is the I_7 part of `complement`.
const std::vector<BundleInfo>& bundle_ids();

/// Throws std::invalid_argument for an unknown id.
Bundle run_bundle(const std::string& id, const ReproOptions& opts = {});

/// `PASS  complement  [3/3, 0.41 s]` followed by one line per sub-claim.
std::string render_bundle(const Bundle& b);

}  // namespace isq
