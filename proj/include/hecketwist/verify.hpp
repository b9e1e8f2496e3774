/*
  Machine verification suites over a fixed algebra context.

  Each suite runs a family of exact identity checks and reports per-check
  pass/fail with the first counterexample rendered on failure.  Row-level
  detail (duality residuals, facet traces) is serialized as a JSON array
  string so drivers can embed it without recomputing.
*/

#ifndef HECKETWIST_VERIFY_HPP
#define HECKETWIST_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecketwist/hecke.hpp"

namespace hecketwist {

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;        // instances examined
  std::string detail;    // first counterexample, empty when passing
  std::string rows_json; // optional serialized row array
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// duality, facets, positivity, convolution, cosets, all
const std::vector<std::string>& suite_names();
bool known_suite(const std::string& name);

// runs the named suite exhaustively on ctx; seed drives the randomized
// product sampling of the convolution suite.  Throws ConfigError on an
// unknown suite name.
SuiteReport run_suite(const AlgebraContext& ctx, const std::string& suite,
                      std::uint64_t seed);

}  // namespace hecketwist

#endif
