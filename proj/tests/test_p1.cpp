#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "extremal/annulus.hpp"
#include "extremal/error.hpp"
#include "extremal/p1.hpp"
#include "extremal/problem.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/specfun.hpp"

using namespace extremal;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// ell = 1, theta = arccos(tanh 1/2), m_Omega = 2
GrotzschProblem fixture_problem() {
  return GrotzschProblem::from_theta(1.0, std::acos(std::tanh(0.5)), 2.0 / (2.0 * kPi));
}

double quad_energy(const ExtremalSolution& s) {
  const auto& pr = s.problem;
  return integrate(
             [&](double x) {
               const double u = s.ux(x);
               return 0.5 * (u + 1.0 / u) * pr.weight(x);
             },
             0.0, pr.T, 1e-11, 2000000)
      .value;
}

}  // namespace

TEST_CASE("weight") {
  const auto pr = GrotzschProblem::from_theta(0.7, 1.2, 1.0);
  CHECK(pr.weight(pr.T / 2) == Approx(0.49).epsilon(1e-15));
  CHECK(pr.weight(0.0) == Approx(pr.weight(pr.T)).epsilon(1e-13));
  CHECK(pr.weight(0.3 * pr.T) == Approx(pr.weight(0.7 * pr.T)).epsilon(1e-12));
  const double q = integrate([&](double x) { return pr.weight(x); }, 0.0, pr.T, 1e-12).value;
  CHECK(q == Approx(2.0 * pr.ell * std::tan(pr.theta)).epsilon(1e-12));
  CHECK(pr.weight_integral() == Approx(q).epsilon(1e-12));
  CHECK_THROWS_AS(pr.weight(-0.1), DomainError);
  CHECK_THROWS_AS(pr.weight(pr.T + 0.1), DomainError);
  CHECK_THROWS_AS(GrotzschProblem::from_theta(1.0, kPi / 2, 1.0), DomainError);
  CHECK_THROWS_AS(GrotzschProblem::from_theta(1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("ux_p1") {
  const auto pr = GrotzschProblem::from_theta(0.7, 1.2, 1.0);
  for (double x : {0.0, 0.4 * pr.T, pr.T}) CHECK(ux_p1(pr, 0.0, x) == 1.0);
  CHECK(ux_p1(pr, -3.0, pr.T / 2) == Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(ux_p1(pr, 1.0, 0.1), DomainError);
  for (double alpha : {-10.0, -1.0, 0.5}) {
    double best = -1.0;
    double arg = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = pr.T * i / 1000.0;
      // |u_x - 1| peaks at the midpoint whatever the sign of alpha
      const double score = (ux_p1(pr, alpha, x) - 1.0) * alpha;
      if (score > best) {
        best = score;
        arg = x;
      }
    }
    CHECK(arg == Approx(pr.T / 2).epsilon(1e-12));
  }
}

TEST_CASE("boundary map is increasing in alpha with the right limits") {
  const double theta = 1.1;
  const double ell = 0.5;
  double prev = 0.0;
  for (double alpha = -1e6; alpha < 1.0; alpha = alpha < -1.0 ? alpha / 3.0 : alpha + 0.05) {
    const double t = 1.0 / std::sqrt(1.0 - alpha);
    const double w = boundary_width_p1(ell, theta, t);
    CHECK(w > prev);
    prev = w;
  }
  CHECK(boundary_width_p1(ell, theta, 1e-8) < 1e-6);
  CHECK(boundary_width_p1(ell, theta, 1e8) > 50.0);
}

TEST_CASE("solve_alpha_p1: identity and trichotomy") {
  const auto pr = GrotzschProblem::from_theta(0.8, 1.0, 2.0 * 1.0 / 0.8);
  const auto sol = solve_alpha_p1(pr);
  CHECK(std::abs(sol.alpha) < 1e-14);
  CHECK(sol.energy == Approx(2.0 * pr.ell * std::tan(pr.theta)).epsilon(1e-13));
  CHECK(sol.u(0.3) == Approx(0.3).epsilon(1e-12));

  for (double factor : {0.3, 0.9, 1.1, 4.0}) {
    const auto q = GrotzschProblem::from_theta(0.8, 1.0, factor * pr.T);
    const auto s = solve_alpha_p1(q);
    CHECK((factor > 1.0 ? s.alpha > 0.0 : s.alpha < 0.0));
    CHECK(s.alpha < 1.0);
    for (int i = 0; i <= 50; ++i) {
      const double x = q.T * i / 50.0;
      CHECK((s.ux(x) - 1.0) * s.alpha > 0.0);
    }
  }
}

TEST_CASE("solve_alpha_p1: fixture and normalisation") {
  const auto pr = fixture_problem();
  const auto sol = solve_alpha_p1(pr);
  CHECK(sol.residual <= 1e-10);
  CHECK(sol.t == Approx(0.1138362156037173478137372479868881687).epsilon(1e-12));
  CHECK(sol.alpha == Approx(-76.16832984844078525116598920543635521).epsilon(1e-11));
  CHECK(sol.energy == Approx(12.74943308733666664765167125557949788).epsilon(1e-12));

  // independent check of the boundary condition by quadrature of u_x
  const double w = integrate([&](double x) { return sol.ux(x); }, 0.0, pr.T, 1e-12).value;
  CHECK(std::abs(w - pr.b) < 1e-10);
  CHECK(std::abs(sol.u(0.0)) < 1e-14);
  CHECK(std::abs(sol.u(pr.T) - pr.b) < 1e-10);
  double prev = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double x = pr.T * i / 200.0;
    CHECK(sol.u(x) > prev);
    prev = sol.u(x);
    if (i > 0 && i < 200) {
      const double h = 1e-6;
      CHECK((sol.u(x + h) - sol.u(x - h)) / (2 * h) == Approx(sol.ux(x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("energy_p1 agrees with quadrature and the split form") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 12; ++k) {
    const double ell = 0.05 + 1.95 * unit(rng);
    const double theta = 0.1 + 1.4 * unit(rng);
    const double b = (2.0 * theta / ell) * (0.3 + 3.0 * unit(rng));
    const auto pr = GrotzschProblem::from_theta(ell, theta, b);
    const auto sol = solve_alpha_p1(pr);
    CAPTURE(ell);
    CAPTURE(theta);
    CHECK(energy_p1(pr, sol) == Approx(quad_energy(sol)).epsilon(1e-8));

    const double alpha = sol.alpha;
    const double tan2 =
        integrate(
            [&](double th) {
              const double c = std::cos(th);
              return std::tan(th) * std::tan(th) / std::sqrt(1.0 - alpha * c * c);
            },
            0.0, theta, 1e-13)
            .value;
    CHECK(std::abs(tan_squared_term(theta, sol.t) - tan2) < 1e-10);
    CHECK(energy_p1_split_form(ell, pr.target_modulus(), alpha, tan2) ==
          Approx(sol.energy).epsilon(1e-9));
  }
}

TEST_CASE("tan-squared identity on a grid") {
  for (double theta = 0.1; theta < 1.56; theta += 0.15) {
    for (double alpha : {-100.0, -5.0, -0.5, 0.0, 0.4, 0.9, 0.999}) {
      const double t = 1.0 / std::sqrt(1.0 - alpha);
      const double q = integrate(
                           [&](double th) {
                             const double c = std::cos(th);
                             return std::tan(th) * std::tan(th) / std::sqrt(1.0 - alpha * c * c);
                           },
                           0.0, theta, 1e-12)
                           .value;
      CHECK(std::abs(tan_squared_term(theta, t) - q) < 1e-10);
    }
  }
}

TEST_CASE("collar energy bound") {
  const double ell = 0.6;
  const auto collar = maximal_collar(ell);
  for (double factor : {0.5, 1.0, 2.0}) {
    const double m = factor * collar.modulus();
    const auto r = collar_energy_bound(ell, collar.delta, m);
    const auto sol = solve_alpha_p1(GrotzschProblem::from_collar(collar, m));
    CHECK(r.value == Approx(sol.energy).epsilon(1e-9));
    CHECK(r.applicable);
    CHECK(r.term("alpha_ell") == Approx(sol.alpha).epsilon(1e-9));
    if (factor == 1.0) CHECK(r.value == Approx(collar.area()).epsilon(1e-9));
  }
  CHECK_FALSE(collar_energy_bound(ell, 3.0 * collar.delta, 1.0).applicable);

  // The boundary map increases in theta, so at a fixed right side the
  // multiplier decreases as theta grows.
  double prev = 2.0;
  for (double delta = 0.2; delta < 4.0; delta += 0.4) {
    const double a = collar_energy_bound(ell, delta, 5.0).term("alpha_ell");
    CHECK(a < prev);
    prev = a;
  }

  // Degenerate collar: with the target modulus proportional to the collar
  // modulus the bound vanishes; at a fixed target it tends to ell^2 m / (4 pi).
  double last = 1e300;
  for (double delta : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto c = Collar::of_radius(ell, delta);
    const double v = collar_energy_bound(ell, delta, 2.0 * c.modulus()).value;
    CHECK(v < last);
    last = v;
  }
  CHECK(last < 1e-3);
  CHECK(collar_energy_bound(ell, 1e-6, 3.0).value ==
        Approx(ell * ell * 3.0 / (4.0 * kPi)).epsilon(1e-4));
}

TEST_CASE("solve_t_equation") {
  const auto r = solve_t_equation(0.9, 0.9);
  CHECK(r.t == 1.0);
  for (double target : {1e-6, 0.01, 0.5, 3.0, 40.0}) {
    const auto s = solve_t_equation(1.3, target);
    CHECK(s.residual <= 1e-11 * std::max(1.0, target));
    CHECK(s.t * ellip_f_mc(1.3, s.t * s.t) == Approx(target).epsilon(1e-12));
  }
  CHECK_THROWS_AS(solve_t_equation(1.3, -1.0), DomainError);
}
