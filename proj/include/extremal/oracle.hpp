#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "extremal/p1.hpp"
#include "extremal/problem.hpp"

namespace extremal {

/// Piecewise-linear radial stretch: u(knots[i]) = values[i].
struct RadialMap {
  std::vector<double> knots;
  std::vector<double> values;

  /// Throws DomainError unless the map is admissible for the problem:
  /// knots strictly increasing from 0 to T, u(0) = 0, u(T) = b, u_x > 0.
  void validate(const GrotzschProblem& problem) const;
  double slope(std::size_t cell) const;
};

/// u sampled at n + 1 equally spaced knots (endpoints pinned to 0 and b).
RadialMap sample_map(const GrotzschProblem& problem, const std::function<double(double)>& u, int n);

/// Piecewise-linear map with n cells and random positive slopes.
RadialMap random_admissible_map(const GrotzschProblem& problem, std::mt19937_64& rng, int n);

/// Integral of (1/2 (u_x + 1/u_x))^p lambda over [0, T]. The distortion is
/// constant on each cell and lambda integrates to ell [tan] there, so the
/// value is exact up to rounding.
double energy_quadrature(const GrotzschProblem& problem, const RadialMap& map);

/// phi(x) = amplitude (1 - s^2)^3, s = (x - center)/width, on |s| < 1.
struct Bump {
  double center = 0.0;
  double width = 1.0;
  double amplitude = 1.0;

  double value(double x) const;
  double derivative(double x) const;
};

/// E[u + eps phi] - E[u] for the p = 1 extremal, integrated over the bump
/// support in the cancellation-free form 1/2 eps phi' (1 - 1/(u_x (u_x + eps phi'))) lambda.
double perturbation_gap(const ExtremalSolution& solution, const Bump& bump, double eps);

struct PerturbationReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
  int negative = 0;  // gaps below -1e-8
  std::vector<double> gaps;
  bool passed() const { return negative == 0; }
};

/// Random bumps (centre, width, amplitude) drawn per trial from a generator
/// seeded by splitmix64(seed + trial); amplitudes are clipped so u_x + eps phi'
/// stays above 10% of min u_x.
PerturbationReport perturbation_test(const ExtremalSolution& solution, int trials, std::uint64_t seed,
                                     double eps = 1e-2);
Bump random_bump(const ExtremalSolution& solution, std::uint64_t trial_seed, double eps);

std::uint64_t splitmix64(std::uint64_t x);

/// The punctured-disc example f0(z) = (z / 2|z|)(|z| + sqrt(|z|^2 + 4)).
double intro_distortion(double r);  // (r^2 + 2) / (r sqrt(r^2 + 4))

/// Integral over eps < |z| < 1/2 of K against |z|^-2 log^-2(1/|z|) dz.
double intro_hyperbolic_energy(double eps);

struct IntroReport {
  double euclidean_quadrature = 0.0;
  double euclidean_closed_form = 0.0;  // pi sqrt 5
  std::vector<double> cutoffs;
  std::vector<double> hyperbolic_energy;
  std::vector<double> decade_ratios;  // H(cutoff_{k+1}) / H(cutoff_k)
  std::vector<double> scaled_energy;  // eps log^2(1/eps) H(eps), tends to 2 pi
  double k_times_r = 0.0;             // K(r) r at r = 1e-6
  double coth_golden = 0.0;           // pi coth(sigma / 2 pi), sigma = 2 pi log(golden ratio)
  double coth_log_modulus = 0.0;      // same with sigma = log(golden ratio)

  bool euclidean_ok(double tol) const;
  bool divergence_increasing() const;
  bool divergence_tenfold() const;  // every decade ratio >= 10
};
IntroReport intro_example_check(int decades = 7);

}  // namespace extremal
