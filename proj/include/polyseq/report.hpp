#pragma once

#include <string>
#include <vector>

namespace polyseq {

// One verification record: every failed identity names the anchor it
// violates together with the inputs and the two values that disagreed.
struct ReportRecord {
  std::string suite;
  std::string check;
  std::string anchor;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = true;
};

using Report = std::vector<ReportRecord>;

// Deterministic order: suite, then check name, then inputs.
void sort_report(Report& report);
bool all_passed(const Report& report);

}  // namespace polyseq
