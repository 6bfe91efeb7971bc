// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcdw/signal.hpp"
#include "lcdw/wavelet.hpp"

namespace lcdw {

// Outcome of one inequality evaluation.  pass means lhs <= rhs * slack;
// the slack is a multiplicative allowance for quadrature error, 1.001 by
// default.  detail carries the check's parameters for report lines.
struct InequalityReport {
  std::string name;
  std::string detail;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 1.0;
  bool pass = false;
};

// A union of (scale, position) cells of a coefficient field, together with
// its volume under the same product measure that field_energy uses.  The
// indicator is row major like CoefficientField::values.
struct ConcentrationRegion {
  std::vector<std::uint8_t> indicator;
  double measure = 0.0;
};

// The whole field as a region.
ConcentrationRegion full_region(const CoefficientField& field);

// Greedy region: cells in decreasing energy order until at least the given
// fraction of the total field energy is covered.  fraction in (0, 1].
ConcentrationRegion top_energy_region(const CoefficientField& field,
                                      double fraction);

// The coefficient row at one scale is a convolution against the dilated
// wavelet, so a Young-type estimate bounds its p-norm:
//   ||Phi(t,.)||_p <= t^((mu+1)(2/p-1)) ||psi||_p ||f||_1.
InequalityReport coeff_lp_bound_check(const WaveletTransformer& wt,
                                      const SampledSignal& f, double t,
                                      double p, double slack = 1.001);

// Supremum analogue under conjugate exponents 1/p + 1/q = 1:
//   sup |Phi(t,.)| <= t^((mu+1)(2/q-1)) ||psi||_q ||f||_p.
// Both exponents must be finite, so p = 1 (q = inf) is rejected.
InequalityReport coeff_sup_bound_check(const WaveletTransformer& wt,
                                       const SampledSignal& f, double t,
                                       double p, double q,
                                       double slack = 1.001);

// Support-size bound: when ||f|| = ||psi|| = 1 every coefficient has
// modulus at most one, so the energy a region captures cannot exceed the
// region's own measure.  Callers normalize f and psi.
InequalityReport concentration_check_1(const CoefficientField& field,
                                       const ConcentrationRegion& region,
                                       double slack = 1.001);

// Product-field bound for two analyses on the same grid and matrix:
//   || Phi_psi f . Phi_phi g ||_p
//     <= (C_psi C_phi)^(1/(2p)) (||psi|| ||phi||)^((p-1)/p) ||f|| ||g||.
InequalityReport lieb_check(const WaveletTransformer& wt_psi,
                            const WaveletTransformer& wt_phi,
                            const SampledSignal& f, const SampledSignal& g,
                            double p, double slack = 1.001);

// Field p-norm bound for p >= 2, an equality at p = 2 up to quadrature:
//   || Phi_psi f ||_p <= C_psi^(1/p) ||psi||^((p-2)/p) ||f||.
InequalityReport lp_field_bound_check(const WaveletTransformer& wt,
                                      const SampledSignal& f, double p,
                                      double slack = 1.001);

// Sharper support-size bound for p > 2, again for normalized f and psi:
//   |Omega| >= captured^(p/(p-2)) C_psi^(2/(2-p)).
// Reported with the region's measure on the right hand side.
InequalityReport concentration_check_2(const CoefficientField& field,
                                       const ConcentrationRegion& region,
                                       double p, double slack = 1.001);

}  // namespace lcdw
