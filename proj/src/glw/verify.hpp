#pragma once

#include <string>
#include <vector>

namespace glw {

// One verification check, usually aggregating many instances (all diagrams
// of one order, all placements of one template).  A failed check always
// carries a reproducer: the diagram or combination, in parseable text form.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string reproducer;  // empty iff passed
  std::string detail;
};

// Aggregated result of one suite run.
struct RunReport {
  std::string command;  // canonical echo: "verify <suite> --max-order N ..."
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;
  // The calibrated Conway specialization sign; 0 unless the conway suite ran
  // and calibration succeeded.
  int conway_sigma = 0;

  bool all_passed() const;
  std::string text() const;
  std::string json() const;
};

// Known suite names, in "all" execution order.
const std::vector<std::string>& suite_names();

// Run one suite (or "all").  max_order <= 0 selects the suite's default:
// 4T and deframing 5, oracle 4 (bosonic 3), conway 6, repring 6; the 8T and
// tensor-identities suites are fixed-size and ignore max_order.  algebra is
// "gl11" or "bosonic" and affects only the oracle suite.  Throws
// std::invalid_argument for an unknown suite or algebra name; check failures
// are reported, never thrown.
RunReport run_suite(const std::string& suite, int max_order = 0,
                    const std::string& algebra = "gl11");

}  // namespace glw
