// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "lcdw/errors.hpp"
#include "lcdw/quadrature.hpp"
#include "lcdw/signal.hpp"

using lcdw::Complex;

namespace {

std::shared_ptr<const lcdw::WeightedMeasure> measure_of(double mu, double r,
                                                        int panels,
                                                        int order) {
  return std::make_shared<lcdw::WeightedMeasure>(
      mu, lcdw::build_grid(r, panels, order));
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("two point rule is the textbook one") {
  lcdw::GaussRule rule = lcdw::gauss_legendre(2);
  double root3inv = 1.0 / std::sqrt(3.0);
  REQUIRE(rule.nodes.size() == 2);
  CHECK(std::abs(rule.nodes[0] + root3inv) < 1e-15);
  CHECK(std::abs(rule.nodes[1] - root3inv) < 1e-15);
  CHECK(std::abs(rule.weights[0] - 1.0) < 1e-15);
  CHECK(std::abs(rule.weights[1] - 1.0) < 1e-15);

  // One panel over [-1, 1] with two nodes reproduces the rule itself.
  lcdw::SymmetricGrid grid = lcdw::build_grid(1.0, 1, 2);
  REQUIRE(grid.nodes.size() == 2);
  CHECK(std::abs(grid.nodes[0] + root3inv) < 1e-15);
  CHECK(std::abs(grid.nodes[1] - root3inv) < 1e-15);
  CHECK(std::abs(grid.weights[0] - 1.0) < 1e-15);
  CHECK(std::abs(grid.weights[1] - 1.0) < 1e-15);
}

TEST_CASE("rule weights sum to interval length") {
  for (int order : {1, 7, 16, 33}) {
    lcdw::GaussRule rule = lcdw::gauss_legendre(order);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(std::abs(sum - 2.0) < 1e-14);
  }
}

TEST_CASE("grids are exactly mirror symmetric and strictly ascending") {
  for (auto [r, panels, order] :
       {std::tuple{12.0, 24, 16}, std::tuple{2.0, 3, 5},
        std::tuple{5.0, 10, 4}}) {
    lcdw::SymmetricGrid grid = lcdw::build_grid(r, panels, order);
    std::size_t n = grid.nodes.size();
    REQUIRE(n == static_cast<std::size_t>(panels) * order);
    for (std::size_t i = 0; i < n; ++i) {
      // Bit-exact mirror: downstream code indexes reflections directly.
      CHECK(grid.nodes[i] == -grid.nodes[n - 1 - i]);
      CHECK(grid.weights[i] == grid.weights[n - 1 - i]);
    }
    for (std::size_t i = 1; i < n; ++i) CHECK(grid.nodes[i - 1] < grid.nodes[i]);
    CHECK(grid.nodes.back() < r);
  }
}

TEST_CASE("weighted measure integrates even monomials exactly") {
  // integral of y^(2k) |y|^(2 mu + 1) over [-R, R] is
  // 2 R^(2k + 2 mu + 2) / (2k + 2 mu + 2) and the integrand is a polynomial
  // on each panel for integer 2 mu + 1, so the rule must nail it.
  double r = 2.0;
  for (double mu : {0.0, 1.0}) {
    auto m = measure_of(mu, r, 4, 8);
    for (int k = 0; k <= 6; ++k) {
      std::vector<Complex> vals;
      vals.reserve(m->size());
      for (double y : m->nodes()) vals.push_back(std::pow(y, 2 * k));
      double expo = 2.0 * k + 2.0 * mu + 2.0;
      double want = 2.0 * std::pow(r, expo) / expo;
      CHECK(std::abs(lcdw::integrate(*m, vals).real() - want) <
            1e-13 * want);
      CHECK(std::abs(lcdw::integrate(*m, vals).imag()) < 1e-15 * want);
    }
  }
}

TEST_CASE("smooth integrands converge on the default panel layout") {
  // Gaussian against |y| dy: integral over the whole line is exactly 1.
  auto m0 = measure_of(0.0, 6.0, 12, 12);
  std::vector<Complex> gauss;
  for (double y : m0->nodes()) gauss.push_back(std::exp(-y * y));
  CHECK(std::abs(lcdw::integrate(*m0, gauss).real() - 1.0) < 1e-13);

  // mu = -1/2 strips the weight entirely: integral of cos over [-3, 3].
  auto mh = measure_of(-0.5, 3.0, 6, 10);
  std::vector<Complex> cosv;
  for (double y : mh->nodes()) cosv.push_back(std::cos(y));
  CHECK(std::abs(lcdw::integrate(*mh, cosv).real() - 2.0 * std::sin(3.0)) <
        1e-13);
}

TEST_CASE("mirror index pairs a node with its negation") {
  auto m = measure_of(0.5, 4.0, 5, 6);
  for (std::size_t i = 0; i < m->size(); ++i) {
    CHECK(m->nodes()[m->mirror_index(i)] == -m->nodes()[i]);
    CHECK(m->weighted_weights()[m->mirror_index(i)] ==
          m->weighted_weights()[i]);
  }
}

TEST_CASE("log grid endpoints weights and totals") {
  lcdw::LogScaleGrid two = lcdw::build_log_grid(1.0, std::exp(1.0), 2);
  REQUIRE(two.nodes.size() == 2);
  CHECK(std::abs(two.nodes[0] - 1.0) < 1e-15);
  CHECK(std::abs(two.nodes[1] - std::exp(1.0)) < 1e-15);
  CHECK(two.weights[0] == 0.5);
  CHECK(two.weights[1] == 0.5);

  lcdw::LogScaleGrid three = lcdw::build_log_grid(0.5, 2.0, 3);
  REQUIRE(three.nodes.size() == 3);
  CHECK(std::abs(three.nodes[1] - 1.0) < 1e-15);
  CHECK(std::abs(three.weights[0] - 0.5 * std::log(2.0)) < 1e-16);
  CHECK(std::abs(three.weights[1] - std::log(2.0)) < 1e-16);

  for (auto [lo, hi, n] : {std::tuple{1.0 / 16, 16.0, 64},
                           std::tuple{0.3, 7.0, 11}}) {
    lcdw::LogScaleGrid g = lcdw::build_log_grid(lo, hi, n);
    double sum = 0.0;
    for (double w : g.weights) sum += w;
    CHECK(std::abs(sum - std::log(hi / lo)) < 1e-13);
  }
}

TEST_CASE("log grid trapezoid rule is second order") {
  // integral of t^0.3 dt/t over [1/4, 4] has a closed form.
  double want = (std::pow(4.0, 0.3) - std::pow(4.0, -0.3)) / 0.3;
  auto value = [&](int count) {
    lcdw::LogScaleGrid g = lcdw::build_log_grid(0.25, 4.0, count);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      acc += std::pow(g.nodes[i], 0.3) * g.weights[i];
    return acc;
  };
  double err_coarse = std::abs(value(17) - want);
  double err_fine = std::abs(value(33) - want);
  CHECK(err_fine / err_coarse > 0.2);
  CHECK(err_fine / err_coarse < 0.3);
}

TEST_CASE("norms and inner products") {
  auto m = measure_of(0.0, 6.0, 12, 12);
  lcdw::SampledSignal f = lcdw::make_signal(
      m, [](double y) { return std::exp(-0.5 * y * y); });
  // squared L2 norm of exp(-y^2/2) against |y| dy is 1
  CHECK(std::abs(lcdw::norm_p(f, 2.0) - 1.0) < 1e-13);
  CHECK(std::abs(lcdw::inner_product(f, f).real() - 1.0) < 1e-13);

  lcdw::SampledSignal ones =
      lcdw::make_signal(m, [](double) { return 1.0; });
  double inf = std::numeric_limits<double>::infinity();
  CHECK(lcdw::norm_p(ones, inf) == 1.0);

  // <f, i f> = -i |f|^2
  lcdw::SampledSignal fi = f;
  for (Complex& v : fi.values) v *= Complex(0.0, 1.0);
  Complex ip = lcdw::inner_product(f, fi);
  CHECK(std::abs(ip.real()) < 1e-14);
  CHECK(std::abs(ip.imag() + 1.0) < 1e-13);

  CHECK_THROWS_AS(lcdw::norm_p(f, 0.5), lcdw::ParameterError);
}

TEST_CASE("interpolation reproduces polynomials at stencil degree") {
  std::vector<double> xs;
  std::vector<Complex> cubic;
  std::vector<Complex> quintic;
  for (int i = 0; i <= 40; ++i) {
    double x = 0.25 * i;
    xs.push_back(x);
    cubic.push_back(Complex(1.0 + x * (2.0 + x * (-0.5 + 0.125 * x)),
                            x * x * x));
    double q = x * x * x * x * x - 3.0 * x * x + 7.0;
    quintic.push_back(Complex(q, -q));
  }
  for (double x : {0.11, 3.4, 7.77, 9.96}) {
    Complex got = lcdw::interpolate(xs, cubic, x, 4, lcdw::OutsidePolicy::kThrow);
    Complex want(1.0 + x * (2.0 + x * (-0.5 + 0.125 * x)), x * x * x);
    CHECK(std::abs(got - want) < 1e-12 * (1.0 + std::abs(want)));
    double q = x * x * x * x * x - 3.0 * x * x + 7.0;
    Complex got6 =
        lcdw::interpolate(xs, quintic, x, 6, lcdw::OutsidePolicy::kThrow);
    CHECK(std::abs(got6 - Complex(q, -q)) < 1e-12 * (1.0 + std::abs(q)));
  }
}

TEST_CASE("interpolation error orders on a smooth function") {
  std::vector<double> xs;
  std::vector<Complex> ys;
  for (int i = 0; i <= 63; ++i) {
    double x = i * (3.14159265358979323846 / 63.0);
    xs.push_back(x);
    ys.push_back(std::sin(x));
  }
  double worst4 = 0.0;
  double worst6 = 0.0;
  for (int i = 0; i < 500; ++i) {
    double x = 0.1 + (3.0 / 499.0) * i;
    double want = std::sin(x);
    worst4 = std::max(worst4,
                      std::abs(lcdw::interpolate(xs, ys, x, 4,
                                                 lcdw::OutsidePolicy::kThrow) -
                               Complex(want)));
    worst6 = std::max(worst6,
                      std::abs(lcdw::interpolate(xs, ys, x, 6,
                                                 lcdw::OutsidePolicy::kThrow) -
                               Complex(want)));
  }
  CHECK(worst4 < 1e-6);
  CHECK(worst6 < 1e-9);
}

TEST_CASE("interpolation outside the support follows the policy") {
  std::vector<double> xs = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<Complex> ys = {1, 1, 1, 1, 1, 1};
  CHECK(lcdw::interpolate(xs, ys, 5.5, 4, lcdw::OutsidePolicy::kZero) ==
        Complex(0.0, 0.0));
  CHECK_THROWS_AS(
      lcdw::interpolate(xs, ys, -0.1, 4, lcdw::OutsidePolicy::kThrow),
      lcdw::RangeError);
  CHECK_THROWS_AS(lcdw::interpolate(xs, ys, 2.5, 8, lcdw::OutsidePolicy::kZero),
                  lcdw::ParameterError);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(lcdw::gauss_legendre(0), lcdw::ParameterError);
  CHECK_THROWS_AS(lcdw::build_grid(-1.0, 4, 4), lcdw::ParameterError);
  CHECK_THROWS_AS(lcdw::build_log_grid(0.0, 1.0, 4), lcdw::ParameterError);
  CHECK_THROWS_AS(lcdw::build_log_grid(2.0, 1.0, 4), lcdw::ParameterError);
  CHECK_THROWS_AS(lcdw::build_log_grid(1.0, 2.0, 1), lcdw::ParameterError);
  CHECK_THROWS_AS(measure_of(-0.6, 1.0, 2, 2), lcdw::ParameterError);
}

}  // TEST_SUITE
