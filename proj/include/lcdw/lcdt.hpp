// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "lcdw/signal.hpp"

namespace lcdw {

// Real 2x2 matrix with unit determinant.  The transform family is indexed
// by these; b = 0 selects the chirped dilation branch.
struct SL2Matrix {
  double a = 0.0;
  double b = 1.0;
  double c = -1.0;
  double d = 0.0;
};

// Throws ParameterError unless the entries are finite and ad - bc is 1
// within 1e-12.
void validate_matrix(const SL2Matrix& m);

// (d, -b, -c, a), the inverse in the unit determinant group.
SL2Matrix invert_matrix(const SL2Matrix& m);

// Normalization of the unchirped transform: 1 / (2^(mu+1) Gamma(mu+1)).
// With this constant the transform of exp(-y^2/2) is exp(-xi^2/2) exactly.
double dunkl_normalization(double mu);

// Chirped kernel for b != 0:
//   exp(i/2 ((d/b) x^2 + (a/b) y^2)) * dunkl_kernel(mu, -x y / b).
Complex lcd_kernel(double mu, const SL2Matrix& m, double x, double y);

// Prefactor of the forward integral, 1 / (Gamma(mu+1) (2 i b)^(mu+1)) on
// the principal branch.  Requires b != 0.
Complex lcd_prefactor(double mu, const SL2Matrix& m);

// A transformed signal, tagged with the matrix that produced it so the
// inverse knows which group element to undo.
struct Spectrum {
  SampledSignal signal;
  SL2Matrix matrix;
};

// Dense table of dunkl_kernel(mu, factor * out[i] * in[j]).  Every
// transform in this library is an integral against such a kernel, and the
// Bessel evaluations dominate the cost, so repeated transforms on a fixed
// grid pair precompute the table once and reduce to complex dot products.
class KernelTable {
 public:
  KernelTable(double mu, const std::vector<double>& out_nodes,
              const std::vector<double>& in_nodes, double factor);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex value(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  const Complex* row(std::size_t i) const { return &values_[i * cols_]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> values_;
};

// Reusable unchirped transform between a fixed signal grid and a fixed
// spectral grid.  forward and inverse share one kernel table because the
// inverse kernel is the conjugate of the forward one.
class DunklPlan {
 public:
  DunklPlan(std::shared_ptr<const WeightedMeasure> signal_grid,
            std::shared_ptr<const WeightedMeasure> spectral_grid);
  const WeightedMeasure& signal_grid() const { return *signal_; }
  const WeightedMeasure& spectral_grid() const { return *spectral_; }
  std::shared_ptr<const WeightedMeasure> signal_grid_ptr() const {
    return signal_;
  }
  std::shared_ptr<const WeightedMeasure> spectral_grid_ptr() const {
    return spectral_;
  }
  const KernelTable& table() const { return table_; }
  std::vector<Complex> forward(const std::vector<Complex>& f) const;
  std::vector<Complex> inverse(const std::vector<Complex>& spectrum) const;

 private:
  std::shared_ptr<const WeightedMeasure> signal_;
  std::shared_ptr<const WeightedMeasure> spectral_;
  KernelTable table_;
  double cmu_;
};

// Reusable chirped transform for a fixed matrix with b != 0 and a fixed
// grid pair.  Results match lcd_forward / lcd_inverse exactly; only the
// kernel evaluations are amortized.
class TransformPlan {
 public:
  TransformPlan(const SL2Matrix& m,
                std::shared_ptr<const WeightedMeasure> signal_grid,
                std::shared_ptr<const WeightedMeasure> spectral_grid);
  const SL2Matrix& matrix() const { return matrix_; }
  const WeightedMeasure& spectral_grid() const { return *spectral_; }
  std::shared_ptr<const WeightedMeasure> spectral_grid_ptr() const {
    return spectral_;
  }
  Spectrum forward(const SampledSignal& f) const;
  SampledSignal inverse(const Spectrum& s) const;

 private:
  SL2Matrix matrix_;
  std::shared_ptr<const WeightedMeasure> signal_;
  std::shared_ptr<const WeightedMeasure> spectral_;
  KernelTable table_;
  Complex prefactor_;
  std::vector<Complex> in_chirp_;
  std::vector<Complex> out_chirp_;
};

// Unchirped transform evaluated at arbitrary output points:
//   c_mu * integral f(y) dunkl_kernel(mu, -x y) dmu(y).
// The inverse flips the kernel sign.  mu is taken from the signal measure.
std::vector<Complex> dunkl_forward_at(const SampledSignal& f,
                                      const std::vector<double>& out_nodes);
std::vector<Complex> dunkl_inverse_at(const SampledSignal& f,
                                      const std::vector<double>& out_nodes);

// Chirped transform values at arbitrary output points.  b = 0 falls back
// to the dilation branch, which interpolates f at x/a and therefore throws
// RangeError when that point leaves the sampled support.
std::vector<Complex> lcd_forward_at(const SL2Matrix& m, const SampledSignal& f,
                                    const std::vector<double>& out_nodes);

// Output grid matched to the expected spectral support: radius grows by
// 1/|b| when |b| < 1 (or by |a| on the dilation branch) and the panel count
// scales with it so node density is preserved.
std::shared_ptr<const WeightedMeasure> default_spectrum_measure(
    const SL2Matrix& m, const WeightedMeasure& in);

// Forward transform onto out_measure, or onto the default spectral grid
// when out_measure is null.
Spectrum lcd_forward(const SL2Matrix& m, const SampledSignal& f,
                     std::shared_ptr<const WeightedMeasure> out_measure =
                         nullptr);

// Inverse transform of a spectrum onto the given grid.  Implemented as the
// forward transform under the inverse matrix, which is an exact inverse in
// the continuum.
SampledSignal lcd_inverse(const Spectrum& s,
                          std::shared_ptr<const WeightedMeasure> out_measure);

// Relative gap between <f, g> and <Ff, Fg>.  Zero for a unitary pair.
double parseval_cross_check(const SampledSignal& f, const SampledSignal& g,
                            const Spectrum& ff, const Spectrum& fg);

// Phase increment of the oscillatory integrand (kernel plus input chirp)
// across one intra-panel node spacing.  Above pi/2 the panel rules start
// to under-resolve the oscillation and callers are expected to warn or
// refine the grid.
struct ResolutionReport {
  double phase_step = 0.0;
  bool adequate = true;
};
ResolutionReport check_sampling_resolution(const SL2Matrix& m,
                                           const WeightedMeasure& in,
                                           const std::vector<double>& out_nodes);

}  // namespace lcdw
