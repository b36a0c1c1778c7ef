#pragma once

// The eight acceptance criteria, shared by the acceptance test and `prym selftest`.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace prym {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
};

/// "PASS [3] title: detail (1.2 s)".
std::string format_line(const CriterionResult& r);

/// Runs criteria 1..8 in order, writing one line per criterion to out as each
/// finishes. Criterion 8 audits the instances computed by the others.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

}  // namespace prym
