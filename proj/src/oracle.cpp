#include "extremal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "extremal/error.hpp"
#include "extremal/quadrature.hpp"

namespace extremal {

namespace {

constexpr double kPi = std::numbers::pi;

// max |d/ds (1 - s^2)^3| = 6 s (1 - s^2)^2 at s = 1/sqrt(5)
constexpr double kBumpSlope = 1.7173002067198384;

double integrate_or_partial(const std::function<double(double)>& f, double lo, double hi, double tol) {
  try {
    return integrate(f, lo, hi, tol, 400000).value;
  } catch (const QuadratureError& e) {
    return e.partial().value;
  }
}

}  // namespace

void RadialMap::validate(const GrotzschProblem& problem) const {
  if (knots.size() < 2 || knots.size() != values.size()) {
    throw DomainError("RadialMap: need matching knots and values, at least two");
  }
  const double tol = 1e-12 * std::max(1.0, problem.T);
  if (std::abs(knots.front()) > tol || std::abs(knots.back() - problem.T) > tol) {
    throw DomainError("RadialMap: knots must span [0, T]");
  }
  if (std::abs(values.front()) > 1e-12 * std::max(1.0, problem.b) ||
      std::abs(values.back() - problem.b) > 1e-12 * std::max(1.0, problem.b)) {
    throw DomainError("RadialMap: need u(0) = 0 and u(T) = b");
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i + 1] > knots[i])) throw DomainError("RadialMap: knots not strictly increasing");
    if (!(values[i + 1] > values[i])) throw DomainError("RadialMap: degenerate cell (u_x <= 0)");
  }
}

double RadialMap::slope(std::size_t cell) const {
  return (values[cell + 1] - values[cell]) / (knots[cell + 1] - knots[cell]);
}

RadialMap sample_map(const GrotzschProblem& problem, const std::function<double(double)>& u, int n) {
  if (n < 1) throw DomainError("sample_map: need at least one cell");
  RadialMap m;
  m.knots.resize(n + 1);
  m.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    m.knots[i] = i == n ? problem.T : problem.T * i / n;
    m.values[i] = u(m.knots[i]);
  }
  m.knots.back() = problem.T;
  m.values.front() = 0.0;
  m.values.back() = problem.b;
  return m;
}

RadialMap random_admissible_map(const GrotzschProblem& problem, std::mt19937_64& rng, int n) {
  if (n < 1) throw DomainError("random_admissible_map: need at least one cell");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> inc(n);
  double total = 0.0;
  for (double& v : inc) {
    // log-uniform over three decades gives strongly non-uniform stretches
    v = std::exp(std::log(1e-3) * unit(rng));
    total += v;
  }
  RadialMap m;
  m.knots.resize(n + 1);
  m.values.resize(n + 1);
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    m.knots[i] = problem.T * i / n;
    m.values[i] = problem.b * acc / total;
    if (i < n) acc += inc[i];
  }
  m.knots.back() = problem.T;
  m.values.back() = problem.b;
  return m;
}

double energy_quadrature(const GrotzschProblem& problem, const RadialMap& map) {
  map.validate(problem);
  const double half = 0.5 * problem.T;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < map.knots.size(); ++i) {
    const double k = map.slope(i);
    const double dist = 0.5 * (k + 1.0 / k);
    const double lam = problem.ell * (std::tan(problem.ell * (map.knots[i + 1] - half)) -
                                      std::tan(problem.ell * (map.knots[i] - half)));
    sum += std::pow(dist, problem.p) * lam;
  }
  return sum;
}

double Bump::value(double x) const {
  const double s = (x - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return amplitude * q * q * q;
}

double Bump::derivative(double x) const {
  const double s = (x - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return -6.0 * amplitude * s * q * q / width;
}

double perturbation_gap(const ExtremalSolution& solution, const Bump& bump, double eps) {
  const GrotzschProblem& pr = solution.problem;
  const double lo = std::max(0.0, bump.center - bump.width);
  const double hi = std::min(pr.T, bump.center + bump.width);
  if (eps == 0.0 || bump.amplitude == 0.0 || !(hi > lo)) return 0.0;
  auto f = [&](double x) {
    const double u = solution.ux(x);
    const double d = eps * bump.derivative(x);
    const double v = u + d;
    if (!(v > 0.0)) throw DomainError("perturbation_gap: perturbed map folds");
    return 0.5 * d * (1.0 - 1.0 / (u * v)) * pr.weight(x);
  };
  const double slope = eps * std::abs(bump.amplitude) / bump.width;
  const double scale = slope * slope * bump.width * pr.ell * pr.ell;
  return integrate_or_partial(f, lo, hi, std::max(1e-6 * scale, 1e-300));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Bump random_bump(const ExtremalSolution& solution, std::uint64_t trial_seed, double eps) {
  const GrotzschProblem& pr = solution.problem;
  std::mt19937_64 rng(trial_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Bump b;
  b.width = pr.T * (0.02 + 0.48 * unit(rng));
  b.center = b.width + (pr.T - 2.0 * b.width) * unit(rng);
  b.amplitude = pr.b * (2.0 * unit(rng) - 1.0);
  const double min_ux = std::min(solution.ux(0.0), solution.ux(0.5 * pr.T));
  if (eps > 0.0) {
    const double cap = 0.9 * min_ux * b.width / (kBumpSlope * eps);
    b.amplitude = std::clamp(b.amplitude, -cap, cap);
  }
  return b;
}

PerturbationReport perturbation_test(const ExtremalSolution& solution, int trials, std::uint64_t seed,
                                     double eps) {
  if (trials < 0) throw DomainError("perturbation_test: trials must be non-negative");
  PerturbationReport r;
  r.trials = trials;
  r.seed = seed;
  r.eps = eps;
  r.min_gap = trials > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  r.max_gap = trials > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
  for (int i = 0; i < trials; ++i) {
    const Bump b = random_bump(solution, splitmix64(seed + static_cast<std::uint64_t>(i)), eps);
    const double gap = perturbation_gap(solution, b, eps);
    r.gaps.push_back(gap);
    r.min_gap = std::min(r.min_gap, gap);
    r.max_gap = std::max(r.max_gap, gap);
    if (gap < -1e-8) ++r.negative;
  }
  return r;
}

double intro_distortion(double r) {
  if (!(r > 0.0)) throw DomainError("intro_distortion: r must be positive");
  return (r * r + 2.0) / (r * std::sqrt(r * r + 4.0));
}

double intro_hyperbolic_energy(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("intro_hyperbolic_energy: eps outside (0, 1/2)");
  // r = e^{-s}: the measure |z|^-2 log^-2(1/|z|) 2 pi r dr becomes 2 pi ds / s^2
  auto f = [](double s) { return 2.0 * kPi * intro_distortion(std::exp(-s)) / (s * s); };
  const double lo = std::log(2.0);
  const double hi = -std::log(eps);
  const double scale = 2.0 * kPi / (eps * hi * hi);
  return integrate(f, lo, hi, 1e-11 * scale, 400000).value;
}

bool IntroReport::euclidean_ok(double tol) const {
  return std::abs(euclidean_quadrature - euclidean_closed_form) <= tol;
}

bool IntroReport::divergence_increasing() const {
  for (std::size_t i = 1; i < hyperbolic_energy.size(); ++i) {
    if (!(hyperbolic_energy[i] > hyperbolic_energy[i - 1])) return false;
  }
  return true;
}

bool IntroReport::divergence_tenfold() const {
  return std::all_of(decade_ratios.begin(), decade_ratios.end(), [](double q) { return q >= 10.0; });
}

IntroReport intro_example_check(int decades) {
  if (decades < 1) throw DomainError("intro_example_check: need at least one decade");
  IntroReport r;
  r.euclidean_quadrature =
      2.0 * kPi *
      integrate([](double t) { return t * intro_distortion(t); }, 0.0, 1.0, 1e-12).value;
  r.euclidean_closed_form = kPi * std::sqrt(5.0);
  for (int k = 1; k <= decades; ++k) {
    const double eps = std::pow(10.0, -k);
    const double h = intro_hyperbolic_energy(eps);
    const double l = std::log(1.0 / eps);
    r.cutoffs.push_back(eps);
    r.hyperbolic_energy.push_back(h);
    r.scaled_energy.push_back(eps * l * l * h);
    if (k > 1) r.decade_ratios.push_back(h / r.hyperbolic_energy[k - 2]);
  }
  r.k_times_r = intro_distortion(1e-6) * 1e-6;
  const double log_golden = std::log(std::numbers::phi);
  r.coth_golden = kPi / std::tanh(log_golden);
  r.coth_log_modulus = kPi / std::tanh(log_golden / (2.0 * kPi));
  return r;
}

}  // namespace extremal
