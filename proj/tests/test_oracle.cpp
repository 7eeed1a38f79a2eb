#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "extremal/annulus.hpp"
#include "extremal/error.hpp"
#include "extremal/oracle.hpp"
#include "extremal/p1.hpp"

using namespace extremal;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

GrotzschProblem random_problem(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double ell = 0.05 + 1.95 * unit(rng);
  const auto collar = maximal_collar(ell);
  const double m = collar.modulus() * (0.5 + 1.5 * unit(rng));
  return GrotzschProblem::from_collar(collar, m);
}
}  // namespace

TEST_CASE("radial map validation") {
  const auto pr = GrotzschProblem::from_theta(0.5, 1.0, 3.0);
  RadialMap id{{0.0, pr.T}, {0.0, pr.b}};
  CHECK_NOTHROW(id.validate(pr));
  CHECK_THROWS_AS((RadialMap{{0.0, 1.0, pr.T}, {0.0, 2.0, 1.5}}.validate(pr)), DomainError);
  CHECK_THROWS_AS((RadialMap{{0.0, 1.0, 1.0, pr.T}, {0.0, 1.0, 2.0, pr.b}}.validate(pr)), DomainError);
  CHECK_THROWS_AS((RadialMap{{0.0, pr.T}, {0.1, pr.b}}.validate(pr)), DomainError);
  CHECK_THROWS_AS((RadialMap{{0.0}, {0.0}}.validate(pr)), DomainError);
}

TEST_CASE("energy of the identity") {
  const auto pr = GrotzschProblem::from_theta(0.7, 1.1, 2.0 * 1.1 / 0.7);
  const auto id = sample_map(pr, [](double x) { return x; }, 7);
  CHECK(energy_quadrature(pr, id) == Approx(2.0 * 0.7 * std::tan(1.1)).epsilon(1e-13));
  const auto pr3 = GrotzschProblem::from_theta(0.7, 1.1, pr.b, 3.0);
  CHECK(energy_quadrature(pr3, id) == Approx(2.0 * 0.7 * std::tan(1.1)).epsilon(1e-13));
}

TEST_CASE("sampled extremal matches the closed form") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    const auto pr = random_problem(rng);
    const auto sol = solve_alpha_p1(pr);
    const auto map = sample_map(pr, [&](double x) { return sol.u(x); }, 10000);
    CAPTURE(pr.ell);
    CHECK(std::abs(energy_quadrature(pr, map) / sol.energy - 1.0) <= 1e-6);
  }
}

TEST_CASE("refinement converges at second order") {
  const auto pr = GrotzschProblem::from_collar(maximal_collar(0.8), 6.0);
  const auto sol = solve_alpha_p1(pr);
  double prev = 0.0;
  for (int n : {50, 100, 200, 400}) {
    const double err =
        std::abs(energy_quadrature(pr, sample_map(pr, [&](double x) { return sol.u(x); }, n)) - sol.energy);
    if (prev > 0.0) CHECK(prev / err >= 3.0);
    prev = err;
  }
}

TEST_CASE("no admissible map beats the sharp bound") {
  std::mt19937_64 rng(99);
  std::mt19937_64 maps(100);
  for (int k = 0; k < 200; ++k) {
    const auto pr = random_problem(rng);
    const double bound = collar_energy_bound(pr.ell, delta_of_theta(pr.theta), pr.target_modulus()).value;
    const int cells = 1 + static_cast<int>(maps() % 60);
    const auto m = random_admissible_map(pr, maps, cells);
    CHECK(energy_quadrature(pr, m) >= bound - 1e-6);
  }
}

TEST_CASE("bump") {
  const Bump b{2.0, 0.5, 3.0};
  CHECK(b.value(2.0) == 3.0);
  CHECK(b.value(2.5) == 0.0);
  CHECK(b.value(1.4) == 0.0);
  for (double x : {1.6, 1.9, 2.2, 2.45}) {
    const double h = 1e-6;
    CHECK(b.derivative(x) == Approx((b.value(x + h) - b.value(x - h)) / (2 * h)).epsilon(1e-7));
  }
  double mx = 0.0;
  for (int i = 0; i <= 100000; ++i) mx = std::max(mx, std::abs(b.derivative(1.5 + i * 1e-5)));
  CHECK(mx * b.width / b.amplitude == Approx(1.7173002067198384).epsilon(1e-8));
}

TEST_CASE("perturbations never undercut the extremal") {
  const auto base = GrotzschProblem::from_collar(maximal_collar(1.0), 1.0);
  const auto pr = GrotzschProblem::from_theta(1.0, base.theta, 2.0 * base.T);
  const auto sol = solve_alpha_p1(pr);

  CHECK(perturbation_gap(sol, Bump{pr.T / 2, pr.T / 4, 1.0}, 0.0) == 0.0);

  const auto rep = perturbation_test(sol, 100, 42);
  CHECK(rep.passed());
  CHECK(rep.min_gap >= -1e-8);
  CHECK(rep.max_gap > 0.0);
  CHECK(rep.gaps.size() == 100);

  const auto again = perturbation_test(sol, 100, 42);
  CHECK(again.gaps == rep.gaps);
  CHECK(perturbation_test(sol, 10, 43).gaps != perturbation_test(sol, 10, 42).gaps);

  // direct difference of energies with a sampled map agrees with the gap
  const Bump b{0.4 * pr.T, 0.2 * pr.T, 0.3};
  const double eps = 0.05;
  const double gap = perturbation_gap(sol, b, eps);
  const auto moved = sample_map(pr, [&](double x) { return sol.u(x) + eps * b.value(x); }, 20000);
  CHECK(energy_quadrature(pr, moved) - sol.energy == Approx(gap).epsilon(1e-3));
}

TEST_CASE("perturbation gap is quadratic in eps") {
  const auto pr = GrotzschProblem::from_collar(maximal_collar(0.6), 3.0);
  const auto sol = solve_alpha_p1(pr);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Bump b = random_bump(sol, splitmix64(seed), 1e-2);
    const double g2 = perturbation_gap(sol, b, 1e-2);
    const double g3 = perturbation_gap(sol, b, 1e-3);
    CHECK(g2 > 0.0);
    CHECK(g2 / g3 == Approx(100.0).epsilon(0.2));
  }
}

TEST_CASE("splitmix64") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("punctured disc example") {
  CHECK(intro_distortion(1.0) == Approx(3.0 / std::sqrt(5.0)).epsilon(1e-15));
  const auto r = intro_example_check();
  CHECK(r.euclidean_closed_form == Approx(7.024814731040726393156374643204894799).epsilon(1e-15));
  CHECK(r.euclidean_ok(1e-8));
  CHECK(std::abs(r.k_times_r - 1.0) <= 1e-6);
  CHECK(r.coth_golden == Approx(r.euclidean_closed_form).epsilon(1e-14));
  CHECK(r.coth_log_modulus == Approx(41.0999622734800652).epsilon(1e-14));

  const double frozen[] = {23.7843459202756, 65.2079577478956, 218.728386611716, 1020.18754229059,
                           5943.17854066687, 39251.7019391275, 279599.757508765};
  REQUIRE(r.hyperbolic_energy.size() == 7);
  for (int k = 0; k < 7; ++k) CHECK(r.hyperbolic_energy[k] == Approx(frozen[k]).epsilon(1e-10));
  CHECK(r.divergence_increasing());
  // grows like 2 pi / (eps log^2(1/eps)): each decade multiplies by
  // 10 k^2/(k+1)^2, which stays below 10
  CHECK_FALSE(r.divergence_tenfold());
  // the first decade overshoots before the slow approach sets in
  for (std::size_t i = 2; i < r.scaled_energy.size(); ++i) {
    CHECK(std::abs(r.scaled_energy[i] - 2.0 * kPi) < std::abs(r.scaled_energy[i - 1] - 2.0 * kPi));
  }
  CHECK_THROWS_AS(intro_hyperbolic_energy(0.6), DomainError);
}
