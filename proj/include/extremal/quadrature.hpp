#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace extremal {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

/// Thrown when the evaluation budget is exhausted before the requested
/// tolerance is met. Carries the best estimate reached so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature of f over [lo, hi].
///
/// Intervals are bisected in order of decreasing local error estimate until
/// the summed estimate is at most `tol` (absolute). Endpoints are never
/// evaluated, so integrable endpoint singularities are tolerated. The result
/// is a deterministic function of (f, lo, hi, tol, max_evaluations).
QuadratureResult integrate(const Integrand& f, double lo, double hi, double tol,
                           std::size_t max_evaluations = 200000);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

}  // namespace extremal
