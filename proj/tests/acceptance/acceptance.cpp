// Acceptance runner: one PASS/FAIL line per criterion, then the sub-claims.
//
//   acceptance            all criteria
//   acceptance 6 14       selected criteria
//   acceptance --jobs 4   search workers
//
// Exit status is 0 only when every selected criterion passes.

#include <cstdlib>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <set>
#include <string>

#include "isq/repro.hpp"

int main(int argc, char** argv) {
  isq::ReproOptions opts;
  opts.golden_dir = ISQ_GOLDEN_DIR;
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      opts.jobs = static_cast<unsigned>(std::atoi(argv[++i]));
    } else {
      wanted.insert(std::atoi(argv[i]));
    }
  }

  int failed = 0;
  for (const auto& info : isq::bundle_ids()) {
    if (info.id == "prop13") continue;  // part of criterion 6
    if (!wanted.empty() && wanted.count(info.criterion) == 0) continue;
    const isq::Bundle b = isq::run_bundle(info.id, opts);
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", b.seconds, b.budget_seconds);
    std::cout << (b.pass() ? "PASS" : "FAIL") << "  criterion " << b.criterion << "  " << b.title << "  (" << timing
              << ")\n";
    for (const auto& c : b.claims) {
      std::cout << "        [" << (c.pass ? "ok" : "fail") << "] " << c.name;
      if (!c.detail.empty()) std::cout << "  -- " << c.detail;
      std::cout << "\n";
    }
    std::cout.flush();
    if (!b.pass()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
