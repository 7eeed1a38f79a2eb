#pragma once

#include <string>
#include <vector>

#include "extremal/problem.hpp"
#include "extremal/report.hpp"

namespace extremal {

enum class SolutionMode { exact_bvp, small_ell_approx };

/// Quadrature grid over [0, T]: Gauss-Legendre panels in phi = ell (x - T/2),
/// mirrored about T/2, each panel short enough that lambda changes by at
/// most `weight_growth` across it.
struct GridOptions {
  int panel_points = 16;
  double max_panel_width = 0.05;
  double weight_growth = 1.1;
};

struct Grid {
  std::vector<double> x;        // ascending, strictly inside (0, T)
  std::vector<double> weights;  // integrate over x
  std::vector<double> cos2;     // cos^2(ell (x - T/2))
};
Grid make_grid(const GrotzschProblem& problem, const GridOptions& options = {});

struct GeneralPSolution {
  GrotzschProblem problem{};
  SolutionMode mode = SolutionMode::exact_bvp;
  /// exact_bvp: alpha_ell in P(u_x) = alpha_ell cos^2(ell (x - T/2)).
  /// small_ell_approx: the constant in u_x = (lambda / alpha)^{1/(p+1)}.
  /// The two conventions differ and are never compared.
  double alpha = 0.0;
  Grid grid;
  std::vector<double> ux;
  double energy = 0.0;             // integral of (1/2 (u_x + 1/u_x))^p lambda
  double lower_form_energy = 0.0;  // integral of u_x^{-p} lambda
  double boundary_residual = 0.0;  // |integral of u_x - b|
  double max_pointwise_residual = 0.0;
  int iterations = 0;
  std::vector<std::string> warnings;

  double max_ux() const;
  double min_ux() const;
};

/// P(t) = (1 - t^-2)(t + 1/t)^{p-1} and its derivative.
double distortion_polynomial(double t, double p);
double distortion_polynomial_derivative(double t, double p);

/// Dense-sampling check that P is strictly increasing on [t_lo, t_hi]
/// (values and derivative).
bool p_monotone_on(double p, double t_lo, double t_hi, int samples = 2000);

/// The t > 0 with P(t) = c. For p = 1 requires c < 1.
double solve_pointwise(double p, double c);

/// Exact minimiser of the p-energy: pointwise Euler-Lagrange solve at every
/// grid node, outer bisection on the multiplier for the boundary condition.
GeneralPSolution solve_general(const GrotzschProblem& problem, const GridOptions& options = {});

/// Closed-form quantities of the small-ell approximation u_x = (lambda/alpha)^{1/(p+1)}.
struct SmallEllClosedForm {
  double secant_integral = 0.0;    // J = integral_0^theta sec^{2/(p+1)}
  double alpha = 0.0;              // (2J/b)^{p+1} ell^{1-p}, so that the stretch ends at b
  double lower_form_energy = 0.0;  // 2 ell^{1-p} (b/2)^{-p} J^{p+1}
  double unit_target_alpha = 0.0;  // (pi b)^{-(p+1)} ell^{1-p} J^{p+1}
  double unit_target_energy = 0.0; // 2 ell^{1-p} (pi b)^{-p} J^{p+1}
};
SmallEllClosedForm small_ell_closed_form(const GrotzschProblem& problem);

/// Small-ell approximate solution on the same grid as solve_general.
/// Warns when max u_x > 0.5, where the approximation is unreliable.
GeneralPSolution solve_small_ell(const GrotzschProblem& problem, const GridOptions& options = {});

/// Quality estimate for the approximation with beta = ell^s: stretches stay
/// below beta on [b/beta, T/2]; the relative error there is about p ell^{2s};
/// the extra distortion on [0, b/beta] is about b / beta^{p+1}.
struct ApproximationDiagnostic {
  double s_power = 0.0;
  double beta = 0.0;
  double interval_end = 0.0;  // b / beta
  double half_width = 0.0;    // T / 2
  double error_scale = 0.0;   // p ell^{2s}
  double extra_distortion = 0.0;
  double energy_scale = 0.0;  // ell^{1-p}
  double max_ux = 0.0;
  bool interval_inside = false;  // b/beta < T/2
};
ApproximationDiagnostic approximation_diagnostic(const GrotzschProblem& problem, double s_power);

/// Lower bound for the p-energy on a genus-g surface with a geodesic of length
/// ell, target ring width m: (4 pi (g-1) - 4) + (pi/4)^p 2 ell^{1-p} / (pi m)^p.
BoundReport lp_collar_bound(double ell, double m, int g, double p);

}  // namespace extremal
