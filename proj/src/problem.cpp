#include "extremal/problem.hpp"

#include <cmath>
#include <numbers>

#include "extremal/error.hpp"

namespace extremal {

namespace {
constexpr double kPi = std::numbers::pi;
}

GrotzschProblem GrotzschProblem::from_theta(double ell, double theta, double b, double p) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("problem: ell must be positive");
  if (!(theta > 0.0 && theta < 0.5 * kPi)) throw DomainError("problem: theta outside (0, pi/2)");
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("problem: target width must be positive");
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("problem: exponent must be >= 1");
  return {ell, 2.0 * theta / ell, theta, b, p};
}

GrotzschProblem GrotzschProblem::from_collar(const Collar& collar, double m_omega, double p) {
  return from_theta(collar.ell, collar.theta, m_omega / (2.0 * kPi), p);
}

GrotzschProblem GrotzschProblem::from_moduli(double ell, double mod_domain, double m_omega,
                                             double p) {
  if (!(mod_domain > 0.0)) throw DomainError("problem: domain modulus must be positive");
  return from_theta(ell, ell * mod_domain / (4.0 * kPi), m_omega / (2.0 * kPi), p);
}

double GrotzschProblem::domain_modulus() const { return 2.0 * kPi * T; }
double GrotzschProblem::target_modulus() const { return 2.0 * kPi * b; }

double GrotzschProblem::weight(double x) const {
  if (!(x >= 0.0 && x <= T)) throw DomainError("weight: x outside [0, T]");
  const double c = std::cos(ell * (x - 0.5 * T));
  return ell * ell / (c * c);
}

double GrotzschProblem::weight_integral() const { return 2.0 * ell * std::tan(theta); }

}  // namespace extremal
