#include "extremal/general_p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "extremal/error.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// P in the variable s = log t: -expm1(-2s) (2 cosh s)^{p-1}.
double p_of_s(double s, double p) {
  return -std::expm1(-2.0 * s) * std::pow(2.0 * std::cosh(s), p - 1.0);
}

double dp_of_s(double s, double p) {
  const double ch = 2.0 * std::cosh(s);
  return 2.0 * std::exp(-2.0 * s) * std::pow(ch, p - 1.0) +
         -std::expm1(-2.0 * s) * (p - 1.0) * std::pow(ch, p - 2.0) * 2.0 * std::sinh(s);
}

double kp(double u, double p) { return std::pow(0.5 * (u + 1.0 / u), p); }

struct HalfGrid {
  std::vector<double> phi;
  std::vector<double> weights;  // in x, i.e. already divided by ell
};

HalfGrid make_half_grid(const GrotzschProblem& problem, const GridOptions& options) {
  if (options.panel_points < 1 || !(options.max_panel_width > 0.0) ||
      !(options.weight_growth > 1.0)) {
    throw DomainError("grid: invalid options");
  }
  const GaussRule rule = gauss_legendre(options.panel_points);
  const double ratio = 1.0 / std::sqrt(options.weight_growth);
  HalfGrid half;
  double a = 0.0;
  while (a < problem.theta) {
    // lambda ~ sec^2, so cos must not drop by more than 1/sqrt(growth)
    const double graded = std::acos(std::cos(a) * ratio) - a;
    double b = a + std::min(options.max_panel_width, graded);
    if (b > problem.theta || problem.theta - b < 1e-3 * (b - a)) b = problem.theta;
    const double mid = 0.5 * (a + b);
    const double half_len = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      half.phi.push_back(mid + half_len * rule.nodes[i]);
      half.weights.push_back(half_len * rule.weights[i] / problem.ell);
    }
    a = b;
  }
  return half;
}

Grid mirror(const GrotzschProblem& problem, const HalfGrid& half) {
  Grid g;
  const std::size_t n = half.phi.size();
  g.x.reserve(2 * n);
  g.weights.reserve(2 * n);
  g.cos2.reserve(2 * n);
  const double mid = 0.5 * problem.T;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = n - 1 - k;
    const double c = std::cos(half.phi[i]);
    g.x.push_back(mid - half.phi[i] / problem.ell);
    g.weights.push_back(half.weights[i]);
    g.cos2.push_back(c * c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cos(half.phi[i]);
    g.x.push_back(mid + half.phi[i] / problem.ell);
    g.weights.push_back(half.weights[i]);
    g.cos2.push_back(c * c);
  }
  return g;
}

// Half of the grid (the right half, phi ascending) is enough for every sum
// because the problem is symmetric about T/2.
struct Sums {
  double width = 0.0;
  double energy = 0.0;
  double lower = 0.0;
};

Sums half_sums(const GrotzschProblem& problem, const HalfGrid& half, const std::vector<double>& ux) {
  Sums s;
  const double ell2 = problem.ell * problem.ell;
  for (std::size_t i = 0; i < ux.size(); ++i) {
    const double c = std::cos(half.phi[i]);
    const double lambda = ell2 / (c * c);
    s.width += half.weights[i] * ux[i];
    s.energy += half.weights[i] * kp(ux[i], problem.p) * lambda;
    s.lower += half.weights[i] * std::pow(ux[i], -problem.p) * lambda;
  }
  s.width *= 2.0;
  s.energy *= 2.0;
  s.lower *= 2.0;
  return s;
}

void fill_solution(GeneralPSolution& sol, const HalfGrid& half, const std::vector<double>& half_ux) {
  sol.grid = mirror(sol.problem, half);
  sol.ux.clear();
  sol.ux.reserve(2 * half_ux.size());
  for (std::size_t k = 0; k < half_ux.size(); ++k) sol.ux.push_back(half_ux[half_ux.size() - 1 - k]);
  sol.ux.insert(sol.ux.end(), half_ux.begin(), half_ux.end());
  const Sums s = half_sums(sol.problem, half, half_ux);
  sol.energy = s.energy;
  sol.lower_form_energy = s.lower;
  sol.boundary_residual = std::abs(s.width - sol.problem.b);
}

}  // namespace

Grid make_grid(const GrotzschProblem& problem, const GridOptions& options) {
  return mirror(problem, make_half_grid(problem, options));
}

double GeneralPSolution::max_ux() const { return *std::max_element(ux.begin(), ux.end()); }
double GeneralPSolution::min_ux() const { return *std::min_element(ux.begin(), ux.end()); }

double distortion_polynomial(double t, double p) {
  if (!(t > 0.0)) throw DomainError("distortion_polynomial: t must be positive");
  return (1.0 - 1.0 / (t * t)) * std::pow(t + 1.0 / t, p - 1.0);
}

double distortion_polynomial_derivative(double t, double p) {
  if (!(t > 0.0)) throw DomainError("distortion_polynomial: t must be positive");
  const double q = t + 1.0 / t;
  const double w = 1.0 - 1.0 / (t * t);
  return std::pow(q, p - 2.0) * (2.0 / (t * t * t) * q + (p - 1.0) * w * w);
}

bool p_monotone_on(double p, double t_lo, double t_hi, int samples) {
  if (!(t_lo > 0.0 && t_lo <= t_hi) || samples < 2) throw DomainError("p_monotone_on: bad interval");
  // sample uniformly in log t
  const double a = std::log(t_lo);
  const double b = std::log(t_hi);
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double s = a + (b - a) * i / (samples - 1);
    const double v = p_of_s(s, p);
    if (!(dp_of_s(s, p) > 0.0)) return false;
    if (i > 0 && t_hi > t_lo && !(v > prev)) return false;
    prev = v;
  }
  return true;
}

double solve_pointwise(double p, double c) {
  if (!std::isfinite(c)) throw SolverError("solve_pointwise: non-finite right side");
  if (p == 1.0) {
    if (!(c < 1.0)) throw SolverError("solve_pointwise: no solution for c >= 1 at p = 1");
    return std::exp(-0.5 * std::log1p(-c));
  }
  if (c == 0.0) return 1.0;
  double lo = 0.0;
  double hi = 0.0;
  double s = 0.0;
  if (c > 0.0) {
    hi = 1.0;
    while (p_of_s(hi, p) < c) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1024.0) throw SolverError("solve_pointwise: cannot bracket root");
    }
    s = std::log1p(c) / (p - 1.0);
  } else {
    lo = -1.0;
    while (p_of_s(lo, p) > c) {
      hi = lo;
      lo *= 2.0;
      if (lo < -1024.0) throw SolverError("solve_pointwise: cannot bracket root");
    }
    s = -std::log1p(-c) / (p + 1.0);
  }
  if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = p_of_s(s, p) - c;
    if (f == 0.0) break;
    (f < 0.0 ? lo : hi) = s;
    double next = s - f / dp_of_s(s, p);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = next - s;
    s = next;
    if (std::abs(step) <= 2.0 * kEps * std::max(1.0, std::abs(s))) break;
    if (!(hi - lo > 2.0 * kEps * std::max(1.0, std::abs(s)))) break;
  }
  return std::exp(s);
}

GeneralPSolution solve_general(const GrotzschProblem& problem, const GridOptions& options) {
  const HalfGrid half = make_half_grid(problem, options);
  const std::size_t n = half.phi.size();
  std::vector<double> cos2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cos(half.phi[i]);
    cos2[i] = c * c;
  }
  const double p = problem.p;
  const bool linear = p == 1.0;
  // At p = 1 the multiplier must stay below 1, so bisect in v = log t with
  // alpha = 1 - e^{-2v}; for p > 1 alpha itself is unrestricted.
  auto alpha_of = [linear](double v) { return linear ? -std::expm1(-2.0 * v) : v; };

  std::vector<double> ux(n);
  auto width = [&](double v) {
    const double alpha = alpha_of(v);
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      try {
        ux[i] = solve_pointwise(p, alpha * cos2[i]);
      } catch (const SolverError& e) {
        std::ostringstream msg;
        msg << e.what() << " at x = " << 0.5 * problem.T + half.phi[i] / problem.ell;
        throw SolverError(msg.str());
      }
      w += half.weights[i] * ux[i];
    }
    return 2.0 * w;
  };

  const double b = problem.b;
  int iterations = 0;
  double lo = 0.0;
  double hi = 0.0;
  const double at_zero = width(0.0);
  if (at_zero < b) {
    hi = 1.0;
    while (width(hi) < b) {
      lo = hi;
      hi *= 2.0;
      if (++iterations > 1100) throw SolverError("solve_general: cannot bracket the multiplier");
    }
  } else if (at_zero > b) {
    lo = -1.0;
    while (width(lo) > b) {
      hi = lo;
      lo *= 2.0;
      if (++iterations > 1100) throw SolverError("solve_general: cannot bracket the multiplier");
    }
  }
  if (lo != hi) {
    for (; iterations < 5000; ++iterations) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      (width(mid) < b ? lo : hi) = mid;
    }
    if (iterations >= 5000) throw SolverError("solve_general: outer bisection did not converge");
  }
  const double v = (lo == hi || std::abs(width(lo) - b) <= std::abs(width(hi) - b)) ? lo : hi;
  width(v);  // leaves ux at the chosen multiplier

  GeneralPSolution sol;
  sol.problem = problem;
  sol.mode = SolutionMode::exact_bvp;
  sol.alpha = alpha_of(v);
  sol.iterations = iterations;
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = sol.alpha * cos2[i];
    residual = std::max(residual,
                        std::abs(distortion_polynomial(ux[i], p) - c) / std::max(1.0, std::abs(c)));
  }
  sol.max_pointwise_residual = residual;
  fill_solution(sol, half, ux);

  const auto [mn, mx] = std::minmax_element(ux.begin(), ux.end());
  if (!p_monotone_on(p, std::min(*mn, 1.0), std::max(*mx, 1.0))) {
    throw SolverError("solve_general: P is not monotone on the solution range");
  }
  return sol;
}

SmallEllClosedForm small_ell_closed_form(const GrotzschProblem& problem) {
  const double p = problem.p;
  const double b = problem.b;
  SmallEllClosedForm cf;
  cf.secant_integral = sec_power_integral(0.0, problem.theta, p);
  const double j = cf.secant_integral;
  const double ell_pow = std::pow(problem.ell, 1.0 - p);
  cf.alpha = std::pow(2.0 * j / b, p + 1.0) * ell_pow;
  cf.lower_form_energy = 2.0 * ell_pow * std::pow(0.5 * b, -p) * std::pow(j, p + 1.0);
  cf.unit_target_alpha = std::pow(kPi * b, -(p + 1.0)) * ell_pow * std::pow(j, p + 1.0);
  cf.unit_target_energy = 2.0 * ell_pow * std::pow(kPi * b, -p) * std::pow(j, p + 1.0);
  return cf;
}

GeneralPSolution solve_small_ell(const GrotzschProblem& problem, const GridOptions& options) {
  if (!(problem.p > 1.0)) throw DomainError("solve_small_ell: requires p > 1");
  const SmallEllClosedForm cf = small_ell_closed_form(problem);
  const HalfGrid half = make_half_grid(problem, options);
  const double ell2 = problem.ell * problem.ell;
  const double q = 1.0 / (problem.p + 1.0);
  std::vector<double> ux(half.phi.size());
  for (std::size_t i = 0; i < ux.size(); ++i) {
    const double c = std::cos(half.phi[i]);
    ux[i] = std::pow(ell2 / (c * c) / cf.alpha, q);
  }
  GeneralPSolution sol;
  sol.problem = problem;
  sol.mode = SolutionMode::small_ell_approx;
  sol.alpha = cf.alpha;
  fill_solution(sol, half, ux);
  if (sol.max_ux() > 0.5) {
    std::ostringstream msg;
    msg << "max u_x = " << sol.max_ux() << " > 0.5: small-ell approximation unreliable";
    sol.warnings.push_back(msg.str());
  }
  return sol;
}

ApproximationDiagnostic approximation_diagnostic(const GrotzschProblem& problem, double s_power) {
  if (!(s_power > 0.0)) throw DomainError("approximation_diagnostic: s must be positive");
  if (!(problem.p > 1.0)) throw DomainError("approximation_diagnostic: requires p > 1");
  ApproximationDiagnostic d;
  d.s_power = s_power;
  d.beta = std::pow(problem.ell, s_power);
  d.interval_end = problem.b / d.beta;
  d.half_width = 0.5 * problem.T;
  d.error_scale = problem.p * std::pow(problem.ell, 2.0 * s_power);
  d.extra_distortion = problem.b / std::pow(d.beta, problem.p + 1.0);
  d.energy_scale = std::pow(problem.ell, 1.0 - problem.p);
  // largest stretch of the approximation sits at T/2 where lambda = ell^2
  // largest at the ends of the interval, where cos^2 is smallest
  const double c = std::cos(problem.theta);
  d.max_ux = std::pow(problem.ell * problem.ell / (c * c) / small_ell_closed_form(problem).alpha,
                      1.0 / (problem.p + 1.0));
  d.interval_inside = d.interval_end < d.half_width;
  return d;
}

BoundReport lp_collar_bound(double ell, double m, int g, double p) {
  if (!(ell > 0.0)) throw DomainError("lp_collar_bound: ell must be positive");
  if (!(m > 0.0)) throw DomainError("lp_collar_bound: m must be positive");
  if (!(p >= 1.0)) throw DomainError("lp_collar_bound: p must be >= 1");
  BoundReport r;
  r.name = "lp_collar";
  const double offset = 4.0 * kPi * (g - 1) - 4.0;
  const double collar = std::pow(0.25 * kPi, p) * 2.0 * std::pow(ell, 1.0 - p) / std::pow(kPi * m, p);
  r.value = offset + collar;
  r.inputs = {{"ell", ell}, {"m", m}, {"g", static_cast<double>(g)}, {"p", p}};
  r.terms = {{"topological_offset", offset},
             {"collar_term", collar},
             {"lp_norm_lower", std::pow(ell, (1.0 - p) / p) / (2.0 * m)}};
  r.add_hypothesis("ell_at_most_0.1", ell <= 0.1);
  r.add_hypothesis("p_greater_than_1", p > 1.0);
  r.add_hypothesis("genus_at_least_2", g >= 2);
  return r;
}

}  // namespace extremal
