#pragma once

namespace extremal {

/// Incomplete elliptic integral argument, parameter convention:
/// F(phi | m) = integral_0^phi (1 - m sin^2 t)^{-1/2} dt.
struct EllipticArg {
  double phi;  ///< amplitude in [0, pi/2]
  double m;    ///< parameter, m sin^2(phi) < 1; any negative value allowed
};

double ellip_f(EllipticArg arg);
double ellip_e(EllipticArg arg);
double ellip_k(double m);

/// Same integrals addressed by the complementary parameter mc = 1 - m.
/// Preferred when m is close to 1, where 1 - m cannot be recovered from m.
double ellip_f_mc(double phi, double mc);
double ellip_e_mc(double phi, double mc);
double ellip_k_mc(double mc);

/// Carlson symmetric forms R_F and R_D (argument checks, then Boost.Math).
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

enum class LambertBranch {
  principal,  ///< W_0 on [-1/e, inf), w >= -1
  lower,      ///< W_{-1} on [-1/e, 0), w <= -1
};

double lambert_w(LambertBranch branch, double x);

/// Unregularised incomplete Beta B_x(a, b), a > 0, b > 0, x in [0, 1].
double inc_beta(double x, double a, double b);

/// Complete Beta B(a, b) for a, b > 0.
double beta(double a, double b);

/// integral_lo^hi cos(x)^{-2/(p+1)} dx for p >= 1 and 0 <= lo <= hi < pi/2,
/// evaluated through incomplete Beta values (elementary at p = 1).
double sec_power_integral(double lo, double hi, double p);

}  // namespace extremal
