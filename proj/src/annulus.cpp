#include "extremal/annulus.hpp"

#include <cmath>
#include <numbers>

#include "extremal/error.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryGuard = 1e-12;

}  // namespace

HyperbolicAnnulus HyperbolicAnnulus::from_length(double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("annulus: ell must be positive");
  return {ell, kPi * kPi / ell};
}

HyperbolicAnnulus HyperbolicAnnulus::from_outer_radius(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("annulus: s must exceed 1");
  const double log_s = std::log(s);
  return {kPi * kPi / log_s, log_s};
}

double HyperbolicAnnulus::s() const { return std::exp(log_s_); }

double HyperbolicAnnulus::density(double r) const {
  if (!(r > 0.0)) throw DomainError("density: radius must be positive");
  const double angle = ell_ * std::log(r) / (2.0 * kPi);
  if (!(std::abs(angle) < 0.5 * kPi - kBoundaryGuard)) {
    throw DomainError("density: radius on or outside the boundary circles");
  }
  return ell_ / (2.0 * kPi) / (r * std::cos(angle));
}

double HyperbolicAnnulus::density_argmin() const {
  // d log(density) / d log r = -1 + c tan(c log r), c = ell / (2 pi)
  const double c = ell_ / (2.0 * kPi);
  return std::exp(std::atan(1.0 / c) / c);
}

double HyperbolicAnnulus::radius_for_density(double lambda0) const {
  const double lo_r = density_argmin();
  if (!(lambda0 >= density(lo_r))) {
    throw DomainError("radius_for_density: value below the minimum density");
  }
  // bisection in log r on the increasing branch
  double lo = std::log(lo_r);
  double hi = log_s_ * (1.0 - 1e-15);
  auto at = [this](double t) {
    const double angle = ell_ * t / (2.0 * kPi);
    return std::log(ell_ / (2.0 * kPi)) - t - std::log(std::cos(angle));
  };
  const double target = std::log(lambda0);
  if (at(hi) < target) return std::exp(hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (at(mid) < target ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

double HyperbolicAnnulus::geodesic_distance(double r) const {
  if (!(r >= 1.0)) throw DomainError("geodesic_distance: need r >= 1");
  const double angle = ell_ * std::log(r) / (2.0 * kPi);
  if (!(angle < 0.5 * kPi - kBoundaryGuard)) {
    throw DomainError("geodesic_distance: r outside the annulus");
  }
  return std::asinh(std::tan(angle));  // = atanh(sin angle), accurate near the rim
}

double HyperbolicAnnulus::radius_at_distance(double delta) const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw DomainError("radius_at_distance: delta must be finite and >= 0");
  }
  const double theta = theta_of_delta(delta);
  if (theta > 0.5 * kPi) throw DomainError("radius_at_distance: angle exceeds pi/2");
  return std::exp(2.0 * kPi / ell_ * theta);
}

double HyperbolicAnnulus::circle_length(double delta) const {
  if (!(delta >= 0.0)) throw DomainError("circle_length: delta must be >= 0");
  return ell_ * std::cosh(delta);
}

double theta_of_delta(double delta) {
  if (!(delta >= 0.0)) throw DomainError("theta_of_delta: delta must be >= 0");
  return std::atan(std::sinh(delta));
}

double delta_of_theta(double theta) {
  if (!(theta >= 0.0 && theta < 0.5 * kPi)) {
    throw DomainError("delta_of_theta: theta outside [0, pi/2)");
  }
  return std::asinh(std::tan(theta));
}

Collar Collar::of_radius(double ell, double delta) {
  if (!(ell > 0.0)) throw DomainError("collar: ell must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("collar: delta must be positive");
  return {ell, delta, theta_of_delta(delta)};
}

Collar Collar::of_theta(double ell, double theta) {
  if (!(ell > 0.0)) throw DomainError("collar: ell must be positive");
  if (!(theta > 0.0 && theta < 0.5 * kPi)) throw DomainError("collar: theta outside (0, pi/2)");
  return {ell, delta_of_theta(theta), theta};
}

double Collar::modulus() const { return 4.0 * kPi / ell * theta; }

double Collar::area() const { return 2.0 * ell * std::sinh(delta); }

Collar maximal_collar(double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("maximal_collar: ell must be positive");
  const double sh = std::sinh(0.5 * ell);
  return {ell, std::asinh(1.0 / sh), std::atan2(1.0, sh)};
}

bool crossing_axes_inequality(double tau_f, double tau_g, double angle) {
  if (!(tau_f > 0.0 && tau_g > 0.0)) throw DomainError("crossing axes: lengths must be positive");
  if (!(angle > 0.0 && angle < kPi)) throw DomainError("crossing axes: angle outside (0, pi)");
  return std::sinh(0.5 * tau_f) * std::sinh(0.5 * tau_g) * std::sin(angle) >= 1.0 - 1e-12;
}

ThetaBracket maximal_theta_bracket(double ell) {
  if (!(ell > 0.0 && ell <= 1.0)) throw DomainError("theta bracket: needs 0 < ell <= 1");
  const double base = 0.5 * kPi - 0.5 * ell;
  return {base, base + ell * ell * ell / 48.0};
}

}  // namespace extremal
