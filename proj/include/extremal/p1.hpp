#pragma once

#include "extremal/problem.hpp"
#include "extremal/report.hpp"

namespace extremal {

/// Minimiser of the mean distortion (p = 1) for a GrotzschProblem.
///
/// The multiplier is stored both as alpha = alpha_ell (normalised by ell^2)
/// and as t = 1/sqrt(1 - alpha), the variable the solver works in; the
/// elliptic parameter alpha/(alpha - 1) equals 1 - t^2.
struct ExtremalSolution {
  GrotzschProblem problem;
  double alpha = 0.0;
  double t = 1.0;
  double energy = 0.0;
  double residual = 0.0;  // |u(T) - b|
  int iterations = 0;

  double u(double x) const;
  double ux(double x) const;
};

/// u_x = 1/sqrt(1 - alpha cos^2(ell (x - T/2))), alpha < 1.
double ux_p1(const GrotzschProblem& problem, double alpha_ell, double x);

/// u(T) for the stretch with parameter t: 2 t F(theta | 1 - t^2) / ell.
double boundary_width_p1(double ell, double theta, double t);

/// Unique t > 0 with t F(theta | 1 - t^2) = target (target > 0).
/// Bisection in log t; the map is increasing from 0 to infinity.
struct TSolve {
  double t = 1.0;
  double residual = 0.0;  // |t F - target|
  int iterations = 0;
};
TSolve solve_t_equation(double theta, double target);

ExtremalSolution solve_alpha_p1(const GrotzschProblem& problem);

/// Closed-form minimal energy ell[(t + 1/t) F - (2/t) E + (2/t) tan(theta) sqrt(t^2 sin^2 + cos^2)]
/// with F, E at (theta | 1 - t^2).
double energy_p1(const GrotzschProblem& problem, const ExtremalSolution& solution);
double energy_p1_closed_form(double ell, double theta, double t);

/// tan(theta) sqrt(1 - alpha cos^2 theta) - sqrt(1 - alpha) E(theta | alpha/(alpha-1)),
/// which equals the integral of tan^2 / sqrt(1 - alpha cos^2) over [0, theta].
double tan_squared_term(double theta, double t);

/// ((2 - alpha)/(4 pi)) ell^2 m_Omega + 2 ell * tan_squared_integral, with the
/// integral supplied by the caller (closed form or quadrature).
double energy_p1_split_form(double ell, double m_omega, double alpha, double tan_squared_integral);

/// Sharp lower bound for the mean distortion of a collar of radius delta
/// mapped onto a ring of modulus m_omega; attained by the extremal stretch.
BoundReport collar_energy_bound(double ell, double delta, double m_omega);

}  // namespace extremal
