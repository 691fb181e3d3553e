#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidcable {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;  // counts on success, first failure otherwise
};

/// Runs every acceptance criterion in order. A criterion passes when all of
/// its exact checks hold and it finishes within its time budget.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

/// One line: "PASS  3  <name>  (0.12 s, budget 10 s)  <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace braidcable
