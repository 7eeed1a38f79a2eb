#include "extremal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "extremal/error.hpp"

namespace extremal {

namespace {

// Kronrod abscissae (descending); odd indices are shared with the 7-point
// Gauss rule. Values from QUADPACK qk15.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const Integrand& f, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  const double f_centre = f(centre);
  double result_gauss = f_centre * kWg[3];
  double result_kronrod = f_centre * kWgk[7];
  double result_abs = std::abs(result_kronrod);

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    f_left[j] = f1;
    f_right[j] = f2;
    result_kronrod += kWgk[j] * (f1 + f2);
    result_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kWgk[7] * std::abs(f_centre - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  const double abs_half = std::abs(half);
  result_abs *= abs_half;
  result_asc *= abs_half;
  double error = std::abs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && error != 0.0) {
    error = result_asc * std::min(1.0, std::pow(200.0 * error / result_asc, 1.5));
  }
  if (result_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    error = std::max(50.0 * eps * result_abs, error);
  }
  if (!std::isfinite(result_kronrod)) error = std::numeric_limits<double>::infinity();
  return {lo, hi, result_kronrod * half, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi, double tol,
                           std::size_t max_evaluations) {
  if (!(tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate: limits must be finite");
  }
  if (lo == hi) return {0.0, 0.0, 0};
  if (hi < lo) {
    QuadratureResult r = integrate(f, hi, lo, tol, max_evaluations);
    r.value = -r.value;
    return r;
  }

  constexpr std::size_t kPerSegment = 15;
  std::priority_queue<Segment> queue;
  Segment first = kronrod15(f, lo, hi);
  std::size_t evaluations = kPerSegment;
  double total = first.value;
  double total_error = first.error;
  queue.push(first);

  while (total_error > tol) {
    if (evaluations + 2 * kPerSegment > max_evaluations) {
      throw QuadratureError("integrate: tolerance not reached within evaluation budget",
                            {total, total_error, evaluations});
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw QuadratureError("integrate: interval cannot be subdivided further",
                            {total, total_error, evaluations});
    }
    Segment left = kronrod15(f, worst.lo, mid);
    Segment right = kronrod15(f, mid, worst.hi);
    evaluations += 2 * kPerSegment;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);

    // Re-sum periodically; the running totals drift when errors span many
    // orders of magnitude.
    if (queue.size() % 64 == 0) {
      auto copy = queue;
      total = 0.0;
      total_error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }
  if (!std::isfinite(total)) {
    throw QuadratureError("integrate: non-finite integrand", {total, total_error, evaluations});
  }
  return {total, total_error, evaluations};
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace extremal
