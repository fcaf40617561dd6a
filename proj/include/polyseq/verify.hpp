#pragma once

#include "polyseq/report.hpp"

#include <vector>

namespace polyseq {

// Bounds for the identity suites. Defaults match the documented acceptance
// ranges; the CLI can tighten or widen them.
struct VerifyBounds {
  int max_n = 8;
  int max_k = 8;
  int stephan_n = 30;    // a_n = b_n sweep
  int series_order = 14; // truncation order for generating-function checks
  int oracle_nk = 4;     // per-index cap for Callan-family oracle sweeps
  int oracle_es = 3;     // per-index cap for E-sequence oracle sweeps
  int enum_bound = 10;   // combined-size cap handed to the generators
};

std::vector<std::string> suite_names();  // includes "all"
bool is_suite(const std::string& name);

// Runs one suite (or every suite for "all"); the result is sorted
// deterministically by suite, check, inputs.
Report run_suite(const std::string& name, const VerifyBounds& bounds);

}  // namespace polyseq
