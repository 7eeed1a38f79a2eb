#include "extremal/figures.hpp"

#include <cmath>
#include <numbers>

#include "extremal/bounds.hpp"
#include "extremal/error.hpp"
#include "extremal/p1.hpp"
#include "extremal/specfun.hpp"

namespace extremal {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr int kThetaSteps = 180;

std::vector<std::string> alpha_columns() {
  std::vector<std::string> cols{"theta"};
  for (double a : figure_alphas()) cols.push_back("alpha=" + format_double(a));
  return cols;
}

// theta = (pi/2) i / N for i < N; the graphs blow up at pi/2 itself
template <class F>
Table theta_sweep(std::string name, std::vector<std::string> comments, F value) {
  Table t;
  t.name = std::move(name);
  t.comments = std::move(comments);
  t.columns = alpha_columns();
  for (int i = 0; i < kThetaSteps; ++i) {
    const double theta = kHalfPi * i / kThetaSteps;
    std::vector<double> row{theta};
    for (double a : figure_alphas()) row.push_back(value(theta, t_of_alpha(a)));
    t.add_row(std::move(row));
  }
  return t;
}

Table integral_graph() {
  return theta_sweep(
      "integral-graph",
      {"figure integral-graph: sharp mean-distortion bound of a collar with ell = 1",
       "column theta: half scaled collar width, radians, theta in [0, pi/2)",
       "columns alpha=a: (s + 1/s) F - 2 s E + 2 tan(theta) sqrt(1 - a cos^2 theta),",
       "  s = sqrt(1 - a), F and E at (theta | a/(a-1)); hyperbolic area units"},
      [](double theta, double t) { return energy_p1_closed_form(1.0, theta, t); });
}

Table theta_graph() {
  return theta_sweep(
      "theta-graph",
      {"figure theta-graph: left side of the multiplier equation",
       "column theta: radians, theta in [0, pi/2)",
       "columns alpha=a: F(theta | a/(a-1)) / sqrt(1 - a), equal to ell m_Omega / (4 pi) at the solution",
       "modulus convention log(outer/inner)"},
      [](double theta, double t) { return t * ellip_f_mc(theta, t * t); });
}

Table lambert_bounds() {
  Table t;
  t.name = "lambert-bounds";
  t.comments = {"figure lambert-bounds: 4 exp(W_{-1}(-x/8)) against x / (2 log(8/x))",
                "column x: dimensionless, x = ell (2 m + 1) in [0, 8/e]",
                "column difference: lambert - rational, <= 0 with equality only at x = 8/e",
                "at x = 0 both sides are defined by their limit 0"};
  t.columns = {"x", "lambert", "rational", "difference"};
  const int n = 400;
  t.add_row({0.0, 0.0, 0.0, 0.0});
  for (int i = 1; i <= n; ++i) {
    const double x = 8.0 / kE * i / n;
    const MajorantSides s = t0_majorant_sides(x);
    t.add_row({x, s.lambert, s.rational, s.difference()});
  }
  return t;
}

Table ratio_graph() {
  Table t;
  t.name = "ratio-graph";
  t.comments = {"figure ratio-graph: (2/ell) F(ell/2 | 1 - log^2(4/ell)/ell^2)",
                "column ell: geodesic length, hyperbolic units; 200 points on (0, 1e-5] then 200 on (1e-5, 0.15]",
                "column ratio: dimensionless, bounded above by 1"};
  t.columns = {"ell", "ratio"};
  const int n = 200;
  for (int i = 1; i <= n; ++i) {
    const double ell = 1e-5 * i / n;
    t.add_row({ell, end_correction_ratio(ell)});
  }
  for (int i = 1; i <= n; ++i) {
    const double ell = 1e-5 + (0.15 - 1e-5) * i / n;
    t.add_row({ell, end_correction_ratio(ell)});
  }
  return t;
}

}  // namespace

const std::vector<double>& figure_alphas() {
  static const std::vector<double> a = {-10.0, -3.0, -1.0, 0.0, 0.5, 0.9};
  return a;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> n = {"integral-graph", "theta-graph", "lambert-bounds",
                                             "ratio-graph"};
  return n;
}

Table figure_table(const std::string& name) {
  if (name == "integral-graph") return integral_graph();
  if (name == "theta-graph") return theta_graph();
  if (name == "lambert-bounds") return lambert_bounds();
  if (name == "ratio-graph") return ratio_graph();
  throw DomainError("unknown figure '" + name + "'");
}

}  // namespace extremal
