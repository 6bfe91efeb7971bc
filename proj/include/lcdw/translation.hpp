// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "lcdw/lcdt.hpp"
#include "lcdw/signal.hpp"

namespace lcdw {

// Generalized translation and the two convolution products built on it.
//
// The classical translation acts spectrally: the transform of T_x f is the
// transform of f multiplied by the kernel evaluated at x. The chirped
// variant conjugates that action by the quadratic phase exp(i d/(2b) z^2),
// which is what makes the chirped kernel satisfy the product formula
//   T_x K(.,y)(z) = exp(-i a/(2b) y^2) K(x,y) K(z,y).
// That identity is the contract fixing the phase convention; see the
// translation tests for the weak-form check.

struct TranslationOperator {
  SL2Matrix matrix;
  double x = 0.0;
};

// Caches the transform plan for one signal/spectrum grid pair so that many
// translations of signals living on the same grid reuse the kernel table.
class TranslationEngine {
 public:
  // spectral_grid == nullptr selects the default spectrum geometry for the
  // classical transform (same radius and panel layout as the signal grid).
  explicit TranslationEngine(std::shared_ptr<const WeightedMeasure> grid,
                             std::shared_ptr<const WeightedMeasure> spectral_grid = nullptr);

  // Classical generalized translation T_x f on the grid of f.
  SampledSignal translate_dunkl(double x, const SampledSignal& f) const;

  // Chirped translation for the matrix m (requires m.b != 0):
  //   T^m_x h = exp(i d/(2b) (x^2 + .^2)) T_x [exp(-i d/(2b) z^2) h].
  SampledSignal translate(const SL2Matrix& m, double x, const SampledSignal& f) const;

  const std::shared_ptr<const WeightedMeasure>& grid() const { return grid_; }
  const std::shared_ptr<const WeightedMeasure>& spectral_grid() const { return spectral_grid_; }
  const DunklPlan& plan() const { return plan_; }

 private:
  std::shared_ptr<const WeightedMeasure> grid_;
  std::shared_ptr<const WeightedMeasure> spectral_grid_;
  DunklPlan plan_;
};

// One-shot variants. Each builds a fresh engine; prefer TranslationEngine
// when translating many signals on one grid.
SampledSignal translate(const TranslationOperator& op, const SampledSignal& f);
SampledSignal translate_dunkl(double x, const SampledSignal& f);

// Convolution against the classical transform, normalized so the transform
// is multiplicative: D(f * g) = D(f) . D(g). Both signals must live on the
// same grid (same order, size, and radius).
SampledSignal convolve_dunkl(const SampledSignal& f, const SampledSignal& g);

// Chirped convolution for the matrix m. Equals the classical product of the
// de-chirped factors, re-chirped on output:
//   (f x g)(x) = exp(i d/(2b) x^2) (f~ * g~)(x),  f~ = exp(-i d/(2b) z^2) f.
SampledSignal convolve_lc(const SL2Matrix& m, const SampledSignal& f, const SampledSignal& g);

struct YoungReport {
  double lhs = 0.0;    // ||f x g||_r
  double rhs = 0.0;    // ||f||_p ||g||_q
  double slack = 0.0;  // multiplicative tolerance used for the verdict
  bool holds = false;  // lhs <= rhs * (1 + slack)
};

// Checks the convolution norm inequality for one exponent triple. Exponents
// must lie in [1, inf] and satisfy 1/p + 1/q - 1 = 1/r to within 1e-12,
// with 1/inf read as zero; anything else raises ParameterError.
YoungReport young_check(const SL2Matrix& m, const SampledSignal& f, const SampledSignal& g,
                        double p, double q, double r, double slack = 1e-9);

}  // namespace lcdw
