#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed discrepancy (or count)
  double tolerance = 0.0;  // what it was compared against
  std::string detail;
};

struct VerifyOptions {
  std::string suite = "all";  // specfun, p1, p, bounds, all
  std::uint64_t seed = 42;
  /// Tolerance for closed form versus adaptive quadrature. Checks whose
  /// names start with "quadrature_" use it; the rest have fixed tolerances.
  double tol = 1e-10;
};

const std::vector<std::string>& verify_suites();

/// Runs the property checks of the selected suite(s). Random samples come
/// from mt19937_64 seeded per check, so results are a pure function of the
/// options. Throws DomainError for an unknown suite or a non-positive tol.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace extremal
