#pragma once

#include "extremal/p1.hpp"
#include "extremal/report.hpp"

namespace extremal {

/// t = 1/sqrt(1 - alpha_ell) and its inverse alpha_ell = 1 - 1/t^2.
double t_of_alpha(double alpha_ell);
double alpha_of_t(double t);

/// Solves t F(theta | 1 - t^2) = ell m_ell. Throws SolverError if the
/// residual exceeds 1e-11 (relative to max(1, ell m_ell)).
TSolve solve_t(double theta, double ell, double m_ell);

/// t0 = 4 exp(W_{-1}(-ell (m_ell + 1/2) / 4)), the solution of
/// ell m_ell = t0 log(4/t0) - ell/2 on the branch t0 <= 4/e.
double t0(double ell, double m_ell);

/// The two sides of 4 exp(W_{-1}(-x/8)) <= x / (2 log(8/x)) on (0, 8/e].
struct MajorantSides {
  double lambert = 0.0;
  double rational = 0.0;
  double difference() const { return lambert - rational; }
};
MajorantSides t0_majorant_sides(double x);
/// True when the inequality holds (a few ulp of slack at the touching point x = 8/e).
bool t0est_check(double x);

/// Largest ell for which the domain-geodesic bound applies: 8 / ((2m+1) e^{2(2m+1)}).
double domain_geodesic_threshold(double m);

/// tan(ell/2) >= t0(ell, m), i.e. cot(theta) >= t0 on [pi/4, pi/2 - ell/2].
bool cot_guard(double ell, double m);

/// Lower bound for the mean distortion of a genus-g surface with a geodesic
/// of length ell mapped to a surface whose annuli have modulus at most 2 pi m:
/// 4 pi (g-1) - 4 + sqrt(2)/(2m+1) (1 + log(4/ell)) log(8/(ell (2m+1))).
/// The report carries the proof chain: ell/t0 against its logarithmic lower
/// bound, and F(pi/2 - ell/2 | 1 - t0^2) against (1 + log(4/ell))/sqrt(2).
BoundReport domain_geodesic_bound(double ell, double m, int g);

/// Energy of the linear stretch of a maximal collar onto a ring of modulus
/// m_omega: 1/2 (mod_a1/m_omega + m_omega/mod_a1) 2 ell / sinh(ell/2).
/// The term "simplified_form" is 4 pi / sinh(ell), flagged by
/// "simplified_form_valid" (1 when m_omega < mod_a1).
BoundReport stretch_upper_bound(double ell, double mod_a1, double m_omega);

/// lambda0 |Omega| (mod_a / mod_omega + mod_omega / mod_a).
double containment_bound(double lambda0, double area_omega, double mod_omega, double mod_a);

struct CurveFamilyInput {
  double d = 0.0;             // shortest essential curve in the ring
  double k_integral = 0.0;    // integral of the distortion over the ring
  double lambda_plus = 0.0;   // max density on the enclosing annulus
  double lambda_minus = 0.0;  // min density
  double r_width = 0.0;
};
void validate(const CurveFamilyInput& in);
/// mod(V) <= k_integral / d^2.
double curve_family_modulus_bound(const CurveFamilyInput& in);
/// integral of K >= (2 r lambda_minus / lambda_plus)^2 mod_a.
double curve_family_energy_bound(const CurveFamilyInput& in, double mod_a);

/// (4 a^2 pi / (2 ell)) (pi - ell) for a short geodesic of length ell in the
/// target; a is supplied by the caller.
BoundReport target_geodesic_bound(double ell, double a);

/// (2/ell) F(ell/2 | 1 - log^2(4/ell)/ell^2), the ratio of the exact and
/// approximate end corrections when t ~ ell/log(4/ell).
double end_correction_ratio(double ell);

/// Closed approximation to t0 in terms of y = ell (m_ell + 1/2):
/// y e^{-2/beta} exp(2 sqrt2 / (sqrt2 beta + beta^2 sqrt(log(4/y) - 1))), beta = 0.3205.
double t0_beta_approximation(double y);

}  // namespace extremal
