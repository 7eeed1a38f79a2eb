#include "extremal/p1.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "extremal/annulus.hpp"
#include "extremal/error.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;

// t F(theta | 1 - t^2), the left side of the boundary condition (times ell/2).
double t_times_f(double theta, double t) { return t * ellip_f_mc(theta, t * t); }

}  // namespace

double ExtremalSolution::ux(double x) const { return ux_p1(problem, alpha, x); }

double ExtremalSolution::u(double x) const {
  if (!(x >= 0.0 && x <= problem.T)) throw DomainError("u: x outside [0, T]");
  const double psi = problem.ell * (x - 0.5 * problem.T);
  const double mc = t * t;
  const double f_psi = std::copysign(ellip_f_mc(std::min(std::abs(psi), problem.theta), mc), psi);
  return t * (f_psi + ellip_f_mc(problem.theta, mc)) / problem.ell;
}

double ux_p1(const GrotzschProblem& problem, double alpha_ell, double x) {
  if (!(alpha_ell < 1.0)) throw DomainError("ux_p1: alpha_ell >= 1 is not integrable");
  if (!(x >= 0.0 && x <= problem.T)) throw DomainError("ux_p1: x outside [0, T]");
  const double c = std::cos(problem.ell * (x - 0.5 * problem.T));
  return 1.0 / std::sqrt(1.0 - alpha_ell * c * c);
}

double boundary_width_p1(double ell, double theta, double t) {
  return 2.0 * t_times_f(theta, t) / ell;
}

TSolve solve_t_equation(double theta, double target) {
  if (!(theta > 0.0 && theta < 0.5 * kPi)) throw DomainError("solve_t: theta outside (0, pi/2)");
  if (!(target > 0.0) || !std::isfinite(target)) throw DomainError("solve_t: target must be positive");

  // t = 1 gives theta; expand the bracket in log t geometrically.
  double lo = 0.0;
  double hi = 0.0;
  const double at_one = theta;
  if (target == at_one) return {1.0, 0.0, 0};
  int iterations = 0;
  if (target > at_one) {
    hi = 1.0;
    while (t_times_f(theta, std::exp(hi)) < target) {
      lo = hi;
      hi *= 2.0;
      if (hi > 300.0) throw SolverError("solve_t: target beyond t = e^300");
      ++iterations;
    }
  } else {
    lo = -1.0;
    while (t_times_f(theta, std::exp(lo)) > target) {
      hi = lo;
      lo *= 2.0;
      if (lo < -700.0) throw SolverError("solve_t: target below t = e^-700");
      ++iterations;
    }
  }
  for (; iterations < 400; ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(mid))) break;
    (t_times_f(theta, std::exp(mid)) < target ? lo : hi) = mid;
  }
  const double t = std::exp(0.5 * (lo + hi));
  return {t, std::abs(t_times_f(theta, t) - target), iterations};
}

ExtremalSolution solve_alpha_p1(const GrotzschProblem& problem) {
  const TSolve ts = solve_t_equation(problem.theta, 0.5 * problem.ell * problem.b);
  ExtremalSolution sol;
  sol.problem = problem;
  sol.t = ts.t;
  sol.alpha = 1.0 - 1.0 / (ts.t * ts.t);
  sol.iterations = ts.iterations;
  sol.residual = std::abs(boundary_width_p1(problem.ell, problem.theta, ts.t) - problem.b);
  if (!(sol.residual <= 1e-10 * std::max(1.0, problem.b))) {
    throw SolverError("solve_alpha_p1: boundary residual " + std::to_string(sol.residual) +
                      " exceeds tolerance");
  }
  sol.energy = energy_p1_closed_form(problem.ell, problem.theta, ts.t);
  return sol;
}

double energy_p1_closed_form(double ell, double theta, double t) {
  const double mc = t * t;
  return ell * ((t + 1.0 / t) * ellip_f_mc(theta, mc) + 2.0 * tan_squared_term(theta, t));
}

double energy_p1(const GrotzschProblem& problem, const ExtremalSolution& solution) {
  return energy_p1_closed_form(problem.ell, problem.theta, solution.t);
}

double tan_squared_term(double theta, double t) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return (std::tan(theta) * std::sqrt(t * t * s * s + c * c) - ellip_e_mc(theta, t * t)) / t;
}

double energy_p1_split_form(double ell, double m_omega, double alpha, double tan_squared_integral) {
  return (2.0 - alpha) / (4.0 * kPi) * ell * ell * m_omega + 2.0 * ell * tan_squared_integral;
}

BoundReport collar_energy_bound(double ell, double delta, double m_omega) {
  if (!(ell > 0.0)) throw DomainError("collar_energy_bound: ell must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("collar_energy_bound: delta must be positive");
  if (!(m_omega > 0.0)) throw DomainError("collar_energy_bound: target modulus must be positive");
  const double theta = theta_of_delta(delta);
  if (!(theta < 0.5 * kPi)) throw DomainError("collar_energy_bound: collar is not doubly connected");

  const TSolve ts = solve_t_equation(theta, ell * m_omega / (4.0 * kPi));
  const double t = ts.t;
  const double alpha = 1.0 - 1.0 / (t * t);
  const double f = ellip_f_mc(theta, t * t);
  const double e = ellip_e_mc(theta, t * t);

  BoundReport r;
  r.name = "collar_energy";
  r.value = energy_p1_closed_form(ell, theta, t);
  r.inputs = {{"ell", ell}, {"delta", delta}, {"m_omega", m_omega}};
  r.terms = {{"theta", theta},
             {"alpha_ell", alpha},
             {"t", t},
             {"F", f},
             {"E", e},
             {"tan_squared_term", tan_squared_term(theta, t)},
             {"collar_area", 2.0 * ell * std::sinh(delta)},
             {"boundary_residual", ts.residual}};
  const double max_delta = maximal_collar(ell).delta;
  r.add_hypothesis("within_maximal_collar", delta <= max_delta * (1.0 + 1e-12),
                   "delta <= asinh(1/sinh(ell/2)) guarantees an embedded collar");
  return r;
}

}  // namespace extremal
