#pragma once

namespace extremal {

/// Round annulus {1/s < |z| < s} with its complete hyperbolic metric.
/// The core geodesic |z| = 1 has length ell = pi^2 / log(s). Only log(s) is
/// stored: s itself overflows a double once ell drops below about 0.014.
class HyperbolicAnnulus {
 public:
  static HyperbolicAnnulus from_length(double ell);
  static HyperbolicAnnulus from_outer_radius(double s);

  double ell() const { return ell_; }
  double log_s() const { return log_s_; }
  double s() const;  // may be +inf for small ell
  double modulus() const { return 2.0 * log_s_; }

  /// Hyperbolic density at |z| = r, model coordinates. On [1, s) it falls
  /// to a minimum at density_argmin() and then increases without bound;
  /// r * density(r) increases on the whole of [1, s).
  double density(double r) const;
  double density_argmin() const;
  /// Smallest r >= density_argmin() with density(r) = lambda0.
  double radius_for_density(double lambda0) const;
  /// Distance from the core circle to |z| = r, for 1 <= r < s.
  double geodesic_distance(double r) const;
  /// Model radius of the circle at distance delta from the core.
  double radius_at_distance(double delta) const;
  /// Hyperbolic length of the circle at distance delta.
  double circle_length(double delta) const;

 private:
  HyperbolicAnnulus(double ell, double log_s) : ell_(ell), log_s_(log_s) {}
  double ell_;
  double log_s_;
};

/// Theta = asin(tanh delta), computed as atan(sinh delta).
double theta_of_delta(double delta);
double delta_of_theta(double theta);

/// Symmetric collar of radius delta about the core geodesic.
struct Collar {
  double ell;
  double delta;
  double theta;

  static Collar of_radius(double ell, double delta);
  static Collar of_theta(double ell, double theta);

  double modulus() const;  // (4 pi / ell) theta
  double area() const;     // 2 ell sinh(delta)
};

/// Collar of radius asinh(1 / sinh(ell/2)).
Collar maximal_collar(double ell);

/// sinh(tau_f/2) sinh(tau_g/2) sin(angle) >= 1, the inequality satisfied by
/// two hyperbolic translations whose axes cross at the given angle.
/// Equality is accepted up to a relative slack of 1e-12.
bool crossing_axes_inequality(double tau_f, double tau_g, double angle);

/// Theta bracket for the maximal collar, valid for 0 < ell <= 1:
/// pi/2 - ell/2 <= Theta <= pi/2 - ell/2 + ell^3/48.
struct ThetaBracket {
  double lower;
  double upper;
};
ThetaBracket maximal_theta_bracket(double ell);

}  // namespace extremal
