#pragma once

// The acceptance suite: nine exact checks over the fixtures and seeded
// random corpora, each reported as one pass/fail line.

#include <functional>
#include <string>
#include <vector>

namespace gentle {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // exceeding it fails the criterion
  std::function<CriterionResult()> run;
};

std::vector<Criterion> acceptance_criteria();
/// Runs every criterion; exceptions count as failures.
std::vector<CriterionResult> run_acceptance();
/// "PASS  3  hereditary anchors  (0.02 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace gentle
