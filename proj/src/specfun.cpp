#include "extremal/specfun.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/ellint_rd.hpp>
#include <boost/math/special_functions/ellint_rf.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "extremal/error.hpp"

namespace extremal {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kInvE = 0.36787944117144233;  // nearest double to 1/e
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_amplitude(double phi) {
  if (!(phi >= 0.0 && phi <= kHalfPi)) {
    throw DomainError("elliptic integral: amplitude outside [0, pi/2]");
  }
}

// y = 1 - m sin^2(phi) arrives already formed so the complementary-parameter
// entry points can build it without cancellation.
double first_kind(double s, double c, double y) {
  if (!(y > 0.0)) throw DomainError("ellip_f: m sin^2(phi) >= 1");
  if (s == 0.0) return 0.0;
  return s * boost::math::ellint_rf(c * c, y, 1.0);
}

double second_kind(double s, double c, double y, double m) {
  if (!(y > 0.0)) throw DomainError("ellip_e: m sin^2(phi) > 1");
  if (s == 0.0) return 0.0;
  const double x = c * c;
  return s * boost::math::ellint_rf(x, y, 1.0) -
         m / 3.0 * s * s * s * boost::math::ellint_rd(x, y, 1.0);
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0) throw DomainError("carlson_rf: negative argument");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("carlson_rf: more than one zero argument");
  }
  return boost::math::ellint_rf(x, y, z);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || !(z > 0.0)) throw DomainError("carlson_rd: invalid argument");
  if (x == 0.0 && y == 0.0) throw DomainError("carlson_rd: x and y both zero");
  return boost::math::ellint_rd(x, y, z);
}

double ellip_f(EllipticArg arg) {
  check_amplitude(arg.phi);
  const double s = std::sin(arg.phi);
  return first_kind(s, std::cos(arg.phi), 1.0 - arg.m * s * s);
}

double ellip_f_mc(double phi, double mc) {
  check_amplitude(phi);
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return first_kind(s, c, c * c + mc * s * s);
}

double ellip_e(EllipticArg arg) {
  check_amplitude(arg.phi);
  const double s = std::sin(arg.phi);
  if (arg.m == 1.0) return s;
  return second_kind(s, std::cos(arg.phi), 1.0 - arg.m * s * s, arg.m);
}

double ellip_e_mc(double phi, double mc) {
  check_amplitude(phi);
  const double s = std::sin(phi);
  if (mc == 0.0) return s;
  const double c = std::cos(phi);
  return second_kind(s, c, c * c + mc * s * s, 1.0 - mc);
}

double ellip_k(double m) {
  if (!(m < 1.0)) throw DomainError("ellip_k: m >= 1");
  return boost::math::ellint_rf(0.0, 1.0 - m, 1.0);
}

double ellip_k_mc(double mc) {
  if (!(mc > 0.0)) throw DomainError("ellip_k: m >= 1");
  return boost::math::ellint_rf(0.0, mc, 1.0);
}

double lambert_w(LambertBranch branch, double x) {
  if (std::isnan(x)) throw DomainError("lambert_w: NaN argument");
  const double gap = x + kInvE;
  if (gap <= 0.0) {
    // -1/e is not representable; accept arguments within rounding of it.
    if (gap > -8.0 * kEps * kInvE) return -1.0;
    throw DomainError("lambert_w: argument below -1/e");
  }
  if (branch == LambertBranch::principal) return boost::math::lambert_w0(x);
  if (!(x < 0.0)) throw DomainError("lambert_w: lower branch needs x < 0");
  return boost::math::lambert_wm1(x);
}

double beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta: parameters must be positive");
  return boost::math::beta(a, b);
}

double inc_beta(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("inc_beta: parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("inc_beta: x outside [0, 1]");
  return boost::math::beta(a, b, x);
}

double sec_power_integral(double lo, double hi, double p) {
  if (!(p >= 1.0)) throw DomainError("sec_power_integral: p < 1");
  if (!(lo >= 0.0 && lo <= hi)) throw DomainError("sec_power_integral: need 0 <= lo <= hi");
  if (!(hi < kHalfPi)) {
    throw DomainError("sec_power_integral: non-integrable singularity at pi/2");
  }
  if (lo == hi) return 0.0;
  // atanh(sin x) written as asinh(tan x), which keeps its accuracy near pi/2
  if (p == 1.0) return std::asinh(std::tan(hi)) - std::asinh(std::tan(lo));
  // d/dx B_{sin^2 x}(1/2, a) = 2 cos(x)^{2a-1} with 2a - 1 = -2/(p+1).
  // Past pi/4 switch to the complement so the Beta argument stays small.
  const double a = 0.5 - 1.0 / (p + 1.0);
  const double full = boost::math::beta(0.5, a);
  auto primitive = [a, full](double x) {
    const double s = std::sin(x);
    const double c = std::cos(x);
    if (s * s <= 0.5) return 0.5 * boost::math::beta(0.5, a, s * s);
    return 0.5 * (full - boost::math::beta(a, 0.5, c * c));
  };
  return primitive(hi) - primitive(lo);
}

}  // namespace extremal
