#include "polyseq/report.hpp"

#include <algorithm>
#include <tuple>

namespace polyseq {

void sort_report(Report& report) {
  std::stable_sort(report.begin(), report.end(), [](const ReportRecord& a, const ReportRecord& b) {
    return std::tie(a.suite, a.check, a.inputs) < std::tie(b.suite, b.check, b.inputs);
  });
}

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const ReportRecord& r) { return r.pass; });
}

}  // namespace polyseq
