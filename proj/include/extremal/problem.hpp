#pragma once

#include "extremal/annulus.hpp"

namespace extremal {

/// Normalised rectangle problem: radial stretches u on [0, T] with u(0) = 0
/// and u(T) = b, weighted by the hyperbolic density lambda(x). T and b are
/// moduli divided by 2 pi (modulus convention log(outer/inner)).
struct GrotzschProblem {
  double ell;    // core geodesic length
  double T;      // domain width = mod(A1) / (2 pi)
  double theta;  // ell T / 2, in (0, pi/2)
  double b;      // target width = m_Omega / (2 pi)
  double p;      // exponent >= 1

  static GrotzschProblem from_theta(double ell, double theta, double b, double p = 1.0);
  static GrotzschProblem from_collar(const Collar& collar, double m_omega, double p = 1.0);
  static GrotzschProblem from_moduli(double ell, double mod_domain, double m_omega,
                                     double p = 1.0);

  double domain_modulus() const;  // 2 pi T
  double target_modulus() const;  // 2 pi b

  /// lambda(x) = ell^2 / cos^2(ell (x - T/2)) for x in [0, T].
  double weight(double x) const;
  /// Closed form of the integral of lambda over [0, T]: 2 ell tan(theta).
  double weight_integral() const;
};

}  // namespace extremal
