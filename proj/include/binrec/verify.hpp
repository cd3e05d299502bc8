#pragma once

/// Cross-pipeline invariant battery behind the `verify` CLI command. Each
/// check pits independent computations against each other (enumeration vs
/// dynamic programming vs algebra, exact vs spectral) and reports a
/// machine-readable result.

#include <optional>
#include <string>
#include <vector>

#include "binrec/combinatorics.hpp"
#include "binrec/exact.hpp"

namespace binrec {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::optional<std::string> only;  // run a single named check
  BigRational x = BigRational(-1, 2);
  int n = 0;  // 0 = per-check default depth
  int pattern_cap = kDefaultPatternCap;
  int path_cap = kDefaultPathCap;
  unsigned long seed = 1;  // for the randomized x sweeps
};

/// Check names: formats, thm2, nzc, hypercubes, lattice, dynamics, shapes,
/// operator_gap, eigen, norms.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace binrec
