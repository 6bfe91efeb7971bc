// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace lcdw {

using Complex = std::complex<double>;

// Throws ParameterError unless mu >= -1/2 and finite.  Every entry point
// that accepts an order parameter funnels through this.
void validate_order(double mu);

// Gamma function on the real line.  Lanczos approximation with reflection
// for x < 1/2 and a Stirling series once the Lanczos window loses digits.
// Non-positive integers throw DomainError.
double gamma_fn(double x);

// Normalized Bessel function j_mu(x) = Gamma(mu+1) * (x/2)^(-mu) * J_mu(x),
// entire and even in x, j_mu(0) = 1.  Requires mu > -1.
// j_{-1/2}(x) = cos(x) and j_{1/2}(x) = sin(x)/x.
double normalized_bessel(double mu, double x);

// The pair (j_mu(x), j_{mu+1}(x)) in one call.  The transform kernel always
// needs both orders, and the backward recurrence produces them together.
struct NormalizedBesselPair {
  double j;       // j_mu(x)
  double j_next;  // j_{mu+1}(x)
};
NormalizedBesselPair normalized_bessel_pair(double mu, double x);

// Internal evaluation routes, exposed so tests can pin their agreement on
// the band where the implementation switches between them.
NormalizedBesselPair normalized_bessel_pair_series(double mu, double x);
NormalizedBesselPair normalized_bessel_pair_recurrence(double mu, double x);

// |x| at or below this value evaluates by power series, above it by
// backward recurrence.
double normalized_bessel_crossover(double mu);

// One-dimensional Dunkl kernel with purely imaginary spectral argument.
// It depends on its two real arguments only through their product p:
//   dunkl_kernel(mu, s*y) = j_mu(s*y) + i * s*y / (2(mu+1)) * j_{mu+1}(s*y).
// Modulus is at most 1 for mu >= -1/2; at mu = -1/2 it reduces to exp(i*p).
Complex dunkl_kernel(double mu, double p);

// Principal branch of z^e for real e.  z = 0 throws DomainError because the
// chirp prefactors this feeds are never evaluated at a vanishing base.
Complex complex_power_principal(Complex z, double e);

}  // namespace lcdw
