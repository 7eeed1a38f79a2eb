#include "extremal/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "extremal/error.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

double t_of_alpha(double alpha_ell) {
  if (!(alpha_ell < 1.0)) throw DomainError("t_of_alpha: alpha_ell must be < 1");
  return 1.0 / std::sqrt(1.0 - alpha_ell);
}

double alpha_of_t(double t) {
  if (!(t > 0.0)) throw DomainError("alpha_of_t: t must be positive");
  return 1.0 - 1.0 / (t * t);
}

TSolve solve_t(double theta, double ell, double m_ell) {
  if (!(ell > 0.0 && m_ell > 0.0)) throw DomainError("solve_t: ell and m_ell must be positive");
  const double target = ell * m_ell;
  const TSolve r = solve_t_equation(theta, target);
  if (!(r.residual <= 1e-11 * std::max(1.0, target))) {
    throw SolverError("solve_t: residual " + std::to_string(r.residual) + " above 1e-11");
  }
  return r;
}

double t0(double ell, double m_ell) {
  if (!(ell > 0.0 && m_ell > 0.0)) throw DomainError("t0: ell and m_ell must be positive");
  return 4.0 * std::exp(lambert_w(LambertBranch::lower, -0.25 * ell * (m_ell + 0.5)));
}

MajorantSides t0_majorant_sides(double x) {
  if (!(x > 0.0 && x <= 8.0 / kE * (1.0 + 1e-15))) {
    throw DomainError("t0_majorant_sides: x outside (0, 8/e]");
  }
  return {4.0 * std::exp(lambert_w(LambertBranch::lower, -x / 8.0)), x / (2.0 * std::log(8.0 / x))};
}

bool t0est_check(double x) {
  const MajorantSides s = t0_majorant_sides(x);
  return s.lambert <= s.rational * (1.0 + 1e-14);
}

double domain_geodesic_threshold(double m) {
  if (!(m > 0.0)) throw DomainError("domain_geodesic_threshold: m must be positive");
  const double k = 2.0 * m + 1.0;
  return 8.0 / (k * std::exp(2.0 * k));
}

bool cot_guard(double ell, double m) {
  if (!(ell > 0.0 && m > 0.0)) throw DomainError("cot_guard: ell and m must be positive");
  // outside the Lambert domain there is no t0 to guard
  if (ell * (2.0 * m + 1.0) > 8.0 / kE) return false;
  return std::tan(0.5 * ell) >= t0(ell, m);
}

BoundReport domain_geodesic_bound(double ell, double m, int g) {
  if (!(ell > 0.0)) throw DomainError("domain_geodesic_bound: ell must be positive");
  if (!(m > 0.0)) throw DomainError("domain_geodesic_bound: m must be positive");
  const double k = 2.0 * m + 1.0;
  const double x = ell * k;
  const double offset = 4.0 * kPi * (g - 1) - 4.0;
  const double log_factor = 1.0 + std::log(4.0 / ell);
  const double width_factor = std::log(8.0 / x);
  const double collar = kSqrt2 / k * log_factor * width_factor;

  BoundReport r;
  r.name = "domain_geodesic";
  r.value = offset + collar;
  r.inputs = {{"ell", ell}, {"m", m}, {"g", static_cast<double>(g)}};
  r.terms = {{"topological_offset", offset},
             {"collar_term", collar},
             {"log_factor", log_factor},
             {"width_factor", width_factor},
             {"threshold", domain_geodesic_threshold(m)}};
  if (x <= 8.0 / kE) {
    const double t = t0(ell, m);
    r.terms.emplace_back("t0", t);
    r.terms.emplace_back("ell_over_t0", ell / t);
    r.terms.emplace_back("ell_over_t0_lower", 2.0 / k * width_factor);
    if (t < 1.0) {
      r.terms.emplace_back("F_t0", ellip_f_mc(0.5 * kPi - 0.5 * ell, t * t));
      r.terms.emplace_back("F_lower", log_factor / kSqrt2);
    }
  }
  r.add_hypothesis("ell_below_threshold", ell <= domain_geodesic_threshold(m),
                   "ell <= 8 / ((2m+1) e^{2(2m+1)})");
  r.add_hypothesis("genus_at_least_2", g >= 2);
  r.add_hypothesis("cot_guard", cot_guard(ell, m), "tan(ell/2) >= t0");
  return r;
}

BoundReport stretch_upper_bound(double ell, double mod_a1, double m_omega) {
  if (!(ell > 0.0 && mod_a1 > 0.0 && m_omega > 0.0)) {
    throw DomainError("stretch_upper_bound: arguments must be positive");
  }
  const double ratio = mod_a1 / m_omega;
  const double area = 2.0 * ell / std::sinh(0.5 * ell);
  BoundReport r;
  r.name = "stretch_upper";
  r.value = 0.5 * (ratio + 1.0 / ratio) * area;
  r.inputs = {{"ell", ell}, {"mod_a1", mod_a1}, {"m_omega", m_omega}};
  r.terms = {{"collar_area", area},
             {"distortion", 0.5 * (ratio + 1.0 / ratio)},
             {"simplified_form", 4.0 * kPi / std::sinh(ell)},
             {"simplified_form_valid", m_omega < mod_a1 ? 1.0 : 0.0}};
  return r;
}

double containment_bound(double lambda0, double area_omega, double mod_omega, double mod_a) {
  if (!(lambda0 > 0.0 && area_omega > 0.0 && mod_omega > 0.0 && mod_a > 0.0)) {
    throw DomainError("containment_bound: arguments must be positive");
  }
  const double r = mod_a / mod_omega;
  return lambda0 * area_omega * (r + 1.0 / r);
}

void validate(const CurveFamilyInput& in) {
  if (!(in.d > 0.0)) throw DomainError("curve family: d must be positive");
  if (!(in.k_integral > 0.0)) throw DomainError("curve family: k_integral must be positive");
  if (!(in.lambda_minus > 0.0 && in.lambda_minus <= in.lambda_plus)) {
    throw DomainError("curve family: need 0 < lambda_minus <= lambda_plus");
  }
  if (!(in.r_width > 0.0)) throw DomainError("curve family: r_width must be positive");
}

double curve_family_modulus_bound(const CurveFamilyInput& in) {
  validate(in);
  return in.k_integral / (in.d * in.d);
}

double curve_family_energy_bound(const CurveFamilyInput& in, double mod_a) {
  validate(in);
  if (!(mod_a > 0.0)) throw DomainError("curve family: mod_a must be positive");
  const double q = 2.0 * in.r_width * in.lambda_minus / in.lambda_plus;
  return q * q * mod_a;
}

BoundReport target_geodesic_bound(double ell, double a) {
  if (!(ell > 0.0)) throw DomainError("target_geodesic_bound: ell must be positive");
  if (!(a > 0.0)) throw DomainError("target_geodesic_bound: a must be positive");
  BoundReport r;
  r.name = "target_geodesic";
  r.value = 4.0 * a * a * kPi / (2.0 * ell) * (kPi - ell);
  r.inputs = {{"ell", ell}, {"a", a}};
  r.add_hypothesis("ell_below_pi", ell < kPi);
  return r;
}

double end_correction_ratio(double ell) {
  if (!(ell > 0.0 && ell < 1.0)) throw DomainError("end_correction_ratio: ell outside (0, 1)");
  const double l4 = std::log(4.0 / ell);
  const double m = 1.0 - l4 * l4 / (ell * ell);
  return 2.0 / ell * ellip_f({0.5 * ell, m});
}

double t0_beta_approximation(double y) {
  if (!(y > 0.0 && y < 4.0 / kE)) throw DomainError("t0_beta_approximation: y outside (0, 4/e)");
  constexpr double beta = 0.3205;
  const double root = std::sqrt(std::log(4.0 / y) - 1.0);
  return y / std::exp(2.0 / beta) * std::exp(2.0 * kSqrt2 / (kSqrt2 * beta + beta * beta * root));
}

}  // namespace extremal
