#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fricke/mat2.hpp"

namespace fricke {

/// One identity checked over randomized trials. Residuals are relative:
/// each trial contributes |lhs - rhs| / (1 + scale) with the scale named in
/// the check's definition, and max_residual is the worst trial.
struct CheckResult {
  std::string name;
  std::size_t trials;
  double max_residual;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  double det_tol = kDefaultDetTol;
  double oracle_tol = kDefaultOracleTol;
  double irr_tol = kDefaultIrrTol;
};

/// Rank-2 suite: matrix identities, the symbolic/numeric differential test,
/// lifting, involution, conjugator recovery, pencil and symmetrization.
std::vector<CheckResult> run_basic_suite(const VerifyOptions& opt);

/// Rank-3 suite: the two trace relations, their intermediate identities,
/// quadratic roots, and the six-coordinate lift round trip.
std::vector<CheckResult> run_fricke_suite(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace fricke
