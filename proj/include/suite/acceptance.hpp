#pragma once
#include <json.hpp>
#include <string>
#include <vector>

namespace suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool within_budget = true;
  double seconds = 0;
  double budget = 0;  // seconds, 0 for none
  nlohmann::json detail;
};

struct SuiteOptions {
  bool quick = false;      // fewer extra samples; every criterion still runs in full
  std::vector<int> only;   // empty: all ten
  unsigned threads = 0;    // 0: parallel_width()
};

// ARTIFACT_THREADS if set to a positive integer, otherwise the hardware concurrency.
unsigned parallel_width();

// Results come back ordered by criterion id whatever the thread count.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt);

nlohmann::json to_json(const CriterionResult& r, bool with_timings);
std::string summary_line(const CriterionResult& r);

}  // namespace suite
