// SPDX-License-Identifier: Apache-2.0
#include "lcdw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lcdw/errors.hpp"

namespace lcdw {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre P_n(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

GaussRule gauss_legendre(int order) {
  if (order < 1)
    throw ParameterError("gauss_legendre: order must be positive, got " +
                         std::to_string(order));
  GaussRule rule;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  // Solve only the positive half and mirror it, so the rule is exactly
  // symmetric.  An odd order puts one node exactly at zero.
  for (int k = 0; k < order / 2; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_derivative(order, x);
      dp = d;
      double step = p / d;
      x -= step;
      if (std::abs(step) < 1e-15) {
        dp = legendre_with_derivative(order, x).second;
        break;
      }
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - k] = x;
    rule.nodes[k] = -x;
    rule.weights[order - 1 - k] = w;
    rule.weights[k] = w;
  }
  if (order % 2) {
    double dp = legendre_with_derivative(order, 0.0).second;
    rule.nodes[order / 2] = 0.0;
    rule.weights[order / 2] = 2.0 / (dp * dp);
  }
  return rule;
}

SymmetricGrid build_grid(double radius, int panels, int order) {
  if (!(radius > 0.0))
    throw ParameterError("build_grid: radius must be positive");
  if (panels < 1 || order < 1)
    throw ParameterError("build_grid: panels and order must be positive");

  GaussRule rule = gauss_legendre(order);
  SymmetricGrid grid;
  grid.radius = radius;
  grid.panels = panels;
  grid.order = order;
  grid.nodes.assign(static_cast<std::size_t>(panels) * order, 0.0);
  grid.weights.assign(grid.nodes.size(), 0.0);

  double h = 2.0 * radius / panels;
  // Fill the upper half (and the central panel when `panels` is odd) from
  // the rule, then reflect.  mid + half * node would not negate exactly
  // across panels, so the lower half is written as explicit negations.
  int first_upper = panels / 2;
  for (int p = first_upper; p < panels; ++p) {
    double lo = -radius + p * h;
    double mid = lo + 0.5 * h;
    bool central = (panels % 2) && (p == first_upper);
    if (central) mid = 0.0;  // avoid -radius + k*h rounding away from zero
    for (int k = 0; k < order; ++k) {
      std::size_t i = static_cast<std::size_t>(p) * order + k;
      grid.nodes[i] = mid + 0.5 * h * rule.nodes[k];
      grid.weights[i] = 0.5 * h * rule.weights[k];
      std::size_t im = grid.nodes.size() - 1 - i;
      grid.nodes[im] = -grid.nodes[i];
      grid.weights[im] = grid.weights[i];
    }
  }
  return grid;
}

WeightedMeasure::WeightedMeasure(double mu, SymmetricGrid grid)
    : mu_(mu), grid_(std::move(grid)) {
  validate_order(mu_);
  weighted_.reserve(grid_.nodes.size());
  double exponent = 2.0 * mu_ + 1.0;
  for (std::size_t i = 0; i < grid_.nodes.size(); ++i) {
    // pow(0, 0) == 1, which is the right limit at mu = -1/2 where the
    // measure is plain Lebesgue.
    weighted_.push_back(grid_.weights[i] *
                        std::pow(std::abs(grid_.nodes[i]), exponent));
  }
}

double WeightedMeasure::max_spacing() const {
  double worst = 0.0;
  for (std::size_t i = 1; i < grid_.nodes.size(); ++i)
    worst = std::max(worst, grid_.nodes[i] - grid_.nodes[i - 1]);
  return worst;
}

Complex integrate(const WeightedMeasure& measure,
                  const std::vector<Complex>& values) {
  if (values.size() != measure.size())
    throw ParameterError("integrate: value count does not match measure");
  KahanAccumulator re;
  KahanAccumulator im;
  const std::vector<double>& ww = measure.weighted_weights();
  for (std::size_t i = 0; i < values.size(); ++i) {
    re.add(values[i].real() * ww[i]);
    im.add(values[i].imag() * ww[i]);
  }
  return {re.value(), im.value()};
}

LogScaleGrid build_log_grid(double t_min, double t_max, int count) {
  if (!(t_min > 0.0) || !(t_max > t_min))
    throw ParameterError("build_log_grid: need 0 < t_min < t_max");
  if (count < 2)
    throw ParameterError("build_log_grid: need at least two nodes");
  LogScaleGrid grid;
  double lo = std::log(t_min);
  double hi = std::log(t_max);
  double h = (hi - lo) / (count - 1);
  grid.nodes.reserve(count);
  grid.weights.assign(count, h);
  grid.weights.front() = 0.5 * h;
  grid.weights.back() = 0.5 * h;
  for (int i = 0; i < count; ++i) {
    double u = (i == count - 1) ? hi : lo + i * h;
    grid.nodes.push_back(std::exp(u));
  }
  return grid;
}

}  // namespace lcdw
