// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>

#include "doctest.h"
#include "lcdw/errors.hpp"
#include "lcdw/special_functions.hpp"

using lcdw::Complex;

namespace {

double abs_err(double got, double want) { return std::abs(got - want); }

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("gamma matches high precision references") {
  // Reference values evaluated with 40-digit arbitrary precision
  // arithmetic and rounded to double.
  CHECK(rel_err(lcdw::gamma_fn(0.5), 1.7724538509055160273) < 1e-14);
  CHECK(rel_err(lcdw::gamma_fn(1.5), 0.88622692545275801365) < 1e-14);
  CHECK(rel_err(lcdw::gamma_fn(4.2), 7.7566895357931794455) < 1e-14);
  CHECK(lcdw::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lcdw::gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lcdw::gamma_fn(6.0) == doctest::Approx(120.0).epsilon(1e-14));
  // Large argument goes through the Stirling branch.
  CHECK(std::abs(lcdw::gamma_fn(60.0) / 1.3868311854568983574e80 - 1.0) <
        1e-13);
  // Negative non-integers go through reflection.
  CHECK(rel_err(lcdw::gamma_fn(-1.5), 2.3632718012073547031) < 1e-13);
  CHECK(rel_err(lcdw::gamma_fn(-2.7), -0.93108278483896396546) < 1e-13);
}

TEST_CASE("gamma rejects poles and non-finite input") {
  CHECK_THROWS_AS(lcdw::gamma_fn(0.0), lcdw::DomainError);
  CHECK_THROWS_AS(lcdw::gamma_fn(-1.0), lcdw::DomainError);
  CHECK_THROWS_AS(lcdw::gamma_fn(-17.0), lcdw::DomainError);
  CHECK_THROWS_AS(lcdw::gamma_fn(std::nan("")), lcdw::DomainError);
}

TEST_CASE("order validation") {
  CHECK_NOTHROW(lcdw::validate_order(-0.5));
  CHECK_NOTHROW(lcdw::validate_order(3.0));
  CHECK_THROWS_AS(lcdw::validate_order(-0.51), lcdw::ParameterError);
  CHECK_THROWS_AS(lcdw::validate_order(std::nan("")), lcdw::ParameterError);
}

TEST_CASE("normalized bessel closed forms at half integer orders") {
  // j_{-1/2}(x) = cos(x).  Points straddle the series/recurrence switch.
  for (double x : {0.0, 0.3, 2.0, 7.0, 9.9, 10.5, 25.0, 200.0}) {
    double want = std::cos(x);
    CHECK(abs_err(lcdw::normalized_bessel(-0.5, x), want) < 2e-12);
  }
  // j_{1/2}(x) = sin(x)/x.
  for (double x : {0.5, 3.0, 11.9, 12.5, 40.0}) {
    double want = std::sin(x) / x;
    CHECK(abs_err(lcdw::normalized_bessel(0.5, x), want) < 1e-11);
  }
  // j_{3/2}(x) = 3 (sin x - x cos x) / x^3.
  for (double x : {0.7, 4.0, 18.0}) {
    double want = 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
    CHECK(abs_err(lcdw::normalized_bessel(1.5, x), want) < 1e-11);
  }
}

TEST_CASE("normalized bessel matches high precision references") {
  CHECK(abs_err(lcdw::normalized_bessel(0.0, 5.0), -0.17759677131433830435) <
        2e-13);
  CHECK(abs_err(lcdw::normalized_bessel(0.0, 40.0), 0.0073668905842372895535) <
        1e-13);
  CHECK(abs_err(lcdw::normalized_bessel(1.0, 3.0), 0.22603930568395763928) <
        2e-13);
  CHECK(abs_err(lcdw::normalized_bessel(1.0, 25.0), -0.010028019966423192372) <
        1e-13);
  CHECK(abs_err(lcdw::normalized_bessel(2.5, 8.0), -0.026027916976601973187) <
        1e-13);
  lcdw::NormalizedBesselPair p = lcdw::normalized_bessel_pair(0.0, 5.0);
  CHECK(abs_err(p.j_next, -0.13103165503658608882) < 2e-13);
  p = lcdw::normalized_bessel_pair(0.3, 17.0);
  CHECK(abs_err(p.j, -0.091336779502570181568) < 1e-13);
  CHECK(abs_err(p.j_next, -0.0010862816798551405758) < 1e-13);
}

TEST_CASE("series and recurrence agree across the switchover band") {
  for (double mu : {-0.5, 0.0, 0.5, 1.0}) {
    double xc = lcdw::normalized_bessel_crossover(mu);
    for (int i = 0; i <= 24; ++i) {
      double x = 0.8 * xc + (0.2 * xc) * i / 24.0;
      lcdw::NormalizedBesselPair a =
          lcdw::normalized_bessel_pair_series(mu, x);
      lcdw::NormalizedBesselPair b =
          lcdw::normalized_bessel_pair_recurrence(mu, x);
      CHECK(std::abs(a.j - b.j) <= 1e-11 * std::max(1.0, std::abs(b.j)));
      CHECK(std::abs(a.j_next - b.j_next) <=
            1e-11 * std::max(1.0, std::abs(b.j_next)));
    }
  }
}

TEST_CASE("normalized bessel is even and equals one at zero") {
  for (double mu : {-0.5, 0.0, 1.0}) {
    lcdw::NormalizedBesselPair origin = lcdw::normalized_bessel_pair(mu, 0.0);
    CHECK(origin.j == 1.0);
    CHECK(origin.j_next == 1.0);
    for (double x : {0.4, 6.0, 31.0}) {
      lcdw::NormalizedBesselPair plus = lcdw::normalized_bessel_pair(mu, x);
      lcdw::NormalizedBesselPair minus = lcdw::normalized_bessel_pair(mu, -x);
      CHECK(plus.j == minus.j);
      CHECK(plus.j_next == minus.j_next);
    }
  }
}

TEST_CASE("kernel modulus bounded by one") {
  for (double mu : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
    for (int i = 0; i <= 200; ++i) {
      double p = -50.0 + 0.5 * i;
      CHECK(std::abs(lcdw::dunkl_kernel(mu, p)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("kernel reduces to complex exponential at mu = -1/2") {
  for (double p : {-19.0, -2.3, 0.0, 0.7, 8.0, 33.0}) {
    Complex got = lcdw::dunkl_kernel(-0.5, p);
    Complex want = std::exp(Complex(0.0, p));
    CHECK(std::abs(got - want) < 3e-12);
  }
}

TEST_CASE("kernel conjugates under sign flip of the product") {
  for (double mu : {-0.5, 0.25, 1.0}) {
    for (double p : {0.9, 5.5, 21.0}) {
      Complex plus = lcdw::dunkl_kernel(mu, p);
      Complex minus = lcdw::dunkl_kernel(mu, -p);
      CHECK(plus.real() == minus.real());
      CHECK(plus.imag() == -minus.imag());
    }
  }
}

TEST_CASE("principal complex power") {
  // sqrt(2i) = 1 + i and sqrt(-2i) = 1 - i on the principal branch.
  Complex a = lcdw::complex_power_principal(Complex(0.0, 2.0), 0.5);
  CHECK(std::abs(a - Complex(1.0, 1.0)) < 1e-15);
  Complex b = lcdw::complex_power_principal(Complex(0.0, -2.0), 0.5);
  CHECK(std::abs(b - Complex(1.0, -1.0)) < 1e-15);

  // (2ib)^(mu+1) * (-2ib)^(mu+1) = (2|b|)^(2 mu + 2) for real b != 0, the
  // identity that makes the inverse transform cancel the forward prefactor.
  for (double bb : {0.7, -0.7, 1.3}) {
    double mu = 0.3;
    Complex lhs = lcdw::complex_power_principal(Complex(0.0, 2.0 * bb), mu + 1) *
                  lcdw::complex_power_principal(Complex(0.0, -2.0 * bb), mu + 1);
    double rhs = std::pow(2.0 * std::abs(bb), 2.0 * mu + 2.0);
    CHECK(std::abs(lhs - Complex(rhs, 0.0)) < 1e-13 * rhs);
  }

  CHECK_THROWS_AS(lcdw::complex_power_principal(Complex(0.0, 0.0), 0.5),
                  lcdw::DomainError);
}

}  // TEST_SUITE
