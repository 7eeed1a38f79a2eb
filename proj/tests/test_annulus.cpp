#include <cmath>
#include <numbers>

#include "doctest.h"
#include "extremal/annulus.hpp"
#include "extremal/error.hpp"
#include "extremal/quadrature.hpp"

using namespace extremal;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("annulus from length and radius") {
  CHECK(HyperbolicAnnulus::from_length(kPi * kPi).s() == Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(HyperbolicAnnulus::from_length(1.0).s() == Approx(std::exp(kPi * kPi)).epsilon(1e-14));
  CHECK(HyperbolicAnnulus::from_length(1.0).modulus() == Approx(2.0 * kPi * kPi).epsilon(1e-15));
  for (int i = 0; i < 100; ++i) {
    const double ell = 0.02 + 0.3 * i;
    const auto a = HyperbolicAnnulus::from_outer_radius(HyperbolicAnnulus::from_length(ell).s());
    CHECK(a.ell() == Approx(ell).epsilon(1e-13));
  }
  CHECK_THROWS_AS(HyperbolicAnnulus::from_length(0.0), DomainError);
  CHECK_THROWS_AS(HyperbolicAnnulus::from_length(-1.0), DomainError);
  CHECK_THROWS_AS(HyperbolicAnnulus::from_outer_radius(1.0), DomainError);
}

TEST_CASE("density") {
  const auto a = HyperbolicAnnulus::from_length(1.0);
  CHECK(a.density(1.0) == Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(2.0 * kPi * a.density(1.0) == Approx(a.ell()).epsilon(1e-15));

  const auto e = HyperbolicAnnulus::from_outer_radius(std::exp(1.0));
  CHECK(e.density(0.999 * e.s()) > 10.0 * e.density(0.9 * e.s()));
  CHECK_THROWS_AS(e.density(e.s()), DomainError);
  CHECK_THROWS_AS(e.density(1.0 / e.s()), DomainError);
  CHECK_THROWS_AS(e.density(5.0), DomainError);

  // falls to a minimum and then rises; r * density rises throughout
  for (double ell : {0.1, 1.0, kPi * kPi}) {
    const auto h = HyperbolicAnnulus::from_length(ell);
    const double rmin = h.density_argmin();
    CHECK(rmin > 1.0);
    double prev_d = 1e300;
    double prev_rd = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double r = std::exp(h.log_s() * 0.995 * i / 399.0);
      const double d = h.density(r);
      if (r < rmin) CHECK(d < prev_d);
      if (r > rmin && prev_d < 1e300 && std::exp(h.log_s() * 0.995 * (i - 1) / 399.0) >= rmin) {
        CHECK(d > prev_d);
      }
      CHECK(r * d > prev_rd);
      prev_d = d;
      prev_rd = r * d;
    }
    const double target = 3.0 * h.density(rmin);
    CHECK(h.density(h.radius_for_density(target)) == Approx(target).epsilon(1e-12));
  }
}

TEST_CASE("distance and radius are inverse") {
  const auto a = HyperbolicAnnulus::from_length(1.0);
  CHECK(a.geodesic_distance(1.0) == 0.0);
  CHECK(a.radius_at_distance(0.0) == 1.0);
  double prev = -1.0;
  for (int i = 0; i < 50; ++i) {
    const double r = std::exp(0.19 * i);
    const double d = a.geodesic_distance(r);
    CHECK(d > prev);
    prev = d;
    CHECK(a.radius_at_distance(d) == Approx(r).epsilon(1e-12));
  }
  const double q = integrate([&](double r) { return a.density(r); }, 1.0, 2.0, 1e-13).value;
  CHECK(std::abs(q - a.geodesic_distance(2.0)) < 1e-10);

  CHECK(std::abs(a.radius_at_distance(40.0) - a.s()) <= 1e-10 * a.s());
  CHECK_THROWS_AS(a.geodesic_distance(a.s()), DomainError);
  CHECK_THROWS_AS(a.radius_at_distance(-1.0), DomainError);
}

TEST_CASE("circle length") {
  const auto a = HyperbolicAnnulus::from_length(2.0);
  CHECK(a.circle_length(0.0) == 2.0);
  CHECK(a.circle_length(1.0) == Approx(2.0 * std::cosh(1.0)).epsilon(1e-15));
  const auto b = HyperbolicAnnulus::from_length(0.7);
  for (double delta : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    const double r = b.radius_at_distance(delta);
    CHECK(2.0 * kPi * r * b.density(r) == Approx(b.circle_length(delta)).epsilon(1e-12));
  }
}

TEST_CASE("collar modulus and area") {
  const auto c = Collar::of_radius(1.0, 1.0);
  CHECK(c.theta == Approx(std::asin(std::tanh(1.0))).epsilon(1e-14));
  CHECK(c.area() == Approx(2.0 * std::sinh(1.0)).epsilon(1e-15));
  CHECK(Collar::of_radius(1.0, 40.0).modulus() == Approx(2.0 * kPi * kPi).epsilon(1e-14));

  // area by polar quadrature of density^2 over {1/r0 < |z| < r0}
  const auto a = HyperbolicAnnulus::from_length(1.0);
  const double r0 = a.radius_at_distance(1.0);
  const double area =
      integrate([&](double r) { return 2.0 * kPi * r * a.density(r) * a.density(r); }, 1.0 / r0, r0,
                1e-10)
          .value;
  CHECK(std::abs(area - c.area()) < 1e-6);

  // identity-map energy over the collar
  for (double delta : {0.3, 1.0, 2.5}) {
    const auto k = Collar::of_radius(0.8, delta);
    const double T = 2.0 * k.theta / k.ell;
    const double e = integrate(
                         [&](double x) {
                           const double cs = std::cos(k.ell * (x - T / 2));
                           return k.ell * k.ell / (cs * cs);
                         },
                         0.0, T, 1e-12)
                         .value;
    CHECK(e == Approx(k.area()).epsilon(1e-11));
  }

  for (double ell : {0.05, 0.5, 3.0}) {
    const auto h = HyperbolicAnnulus::from_length(ell);
    double prev_m = 0.0;
    double prev_a = 0.0;
    for (double delta = 0.1; delta < 6.0; delta += 0.3) {
      const auto k = Collar::of_radius(ell, delta);
      CHECK(k.modulus() == Approx(2.0 * std::log(h.radius_at_distance(delta))).epsilon(1e-12));
      CHECK(k.modulus() > prev_m);
      CHECK(k.area() > prev_a);
      CHECK(k.modulus() <= h.modulus());
      prev_m = k.modulus();
      prev_a = k.area();
    }
  }
}

TEST_CASE("maximal collar") {
  double prev_area = 0.0;
  for (double ell : {10.0, 3.0, 1.0, 0.3, 0.1, 0.01, 1e-3, 1e-4}) {
    const auto c = maximal_collar(ell);
    CHECK(c.area() <= 4.0);
    CHECK(c.area() > prev_area);
    prev_area = c.area();
    CHECK(c.modulus() >= 4.0 * kPi / ell - kPi * ell / 2.0);
    // asin(sech) >= sech, so the sech form is a lower bound for the modulus
    CHECK(c.modulus() == Approx(4.0 * kPi / ell * std::asin(1.0 / std::cosh(ell / 2))).epsilon(1e-11));
    CHECK(c.modulus() >= 4.0 * kPi / std::cosh(ell / 2) / ell);
    CHECK(4.0 * kPi / std::cosh(ell / 2) / ell >= (4.0 * kPi / ell - kPi * ell / 2.0) * (1.0 - 1e-15));
    CHECK(c.area() == Approx(2.0 * ell / std::sinh(ell / 2)).epsilon(1e-13));
    CHECK(c.theta == Approx(std::asin(1.0 / std::cosh(ell / 2))).epsilon(1e-12));
    CHECK(crossing_axes_inequality(ell, 2.0 * c.delta, kPi / 2));
  }
  CHECK(maximal_collar(1e-4).area() == Approx(4.0).epsilon(1e-8));

  const auto one = maximal_collar(1.0);
  CHECK(one.theta >= kPi / 2 - 0.5);
  CHECK(one.theta <= kPi / 2 - 0.5 + 1.0 / 48.0);
  CHECK(std::abs(one.theta - std::acos(std::tanh(0.5))) < 1e-12);
  CHECK(std::abs(maximal_collar(1.0).area() - 3.838069502669887438984405757454012319) < 1e-14);

  for (double ell = 0.01; ell <= 1.0; ell += 0.01) {
    const auto br = maximal_theta_bracket(ell);
    const double theta = maximal_collar(ell).theta;
    CHECK(theta >= br.lower - 1e-15);
    CHECK(theta <= br.upper + 1e-15);
  }
}

TEST_CASE("crossing axes inequality") {
  const double tau = 2.0 * std::asinh(1.0);
  CHECK(crossing_axes_inequality(tau, tau, kPi / 2));
  CHECK_FALSE(crossing_axes_inequality(0.1, 0.1, kPi / 2));
  CHECK_THROWS_AS(crossing_axes_inequality(0.0, 1.0, 1.0), DomainError);
}
