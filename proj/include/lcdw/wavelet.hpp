// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "lcdw/lcdt.hpp"
#include "lcdw/signal.hpp"
#include "lcdw/translation.hpp"

namespace lcdw {

// Continuous chirped wavelet machinery: dilation, the translated and
// chirped mother-wavelet family, admissibility, analysis along a log scale
// grid, synthesis, and the reproducing kernel.
//
// Scale integrals throughout use the measure t^-(2 mu + 2) dt / t.  With
// that choice, and with the admissibility constant defined below, the
// orthogonality, Plancherel, synthesis, and reproducing-kernel identities
// hold exactly in the continuum for every order mu; the plain dt/t measure
// makes the scale integral lambda-dependent and breaks all four.

struct MotherWavelet {
  SampledSignal signal;
};

// Validates finiteness and a strictly positive L2 norm.
MotherWavelet make_wavelet(SampledSignal psi);

struct FamilyMember {
  double t = 1.0;
  double x = 0.0;
  SL2Matrix matrix;
  SampledSignal values;
};

// L2-preserving dilation t^-(mu+1) psi(. / t), resampled onto the grid of
// psi with local interpolation; points that map outside the sampled range
// read as zero.  t must be positive and finite.
SampledSignal dilate(double t, const SampledSignal& psi);

// Chirped family member exp(-i a/(2b) (y^2 - x^2)) T_x (dilate(t) psi).
// Requires b != 0.  With a = 0 the chirp is identically one and this is
// the classical translated wavelet.
FamilyMember family_member(const SL2Matrix& m, double t, double x,
                           const SampledSignal& psi);

// Admissibility constant
//   C_psi = (2^(mu+1) Gamma(mu+1))^2 |b|^(2 mu + 2)
//             integral_0^inf |G(xi)|^2 dxi/xi,
// where G is the chirped transform of exp(-i a/(2b) z^2) psi.  Evaluated
// by log-grid quadrature.  The squared-Gamma factor is what makes the
// field energy with the scale measure above equal C_psi ||f||^2 exactly.
// Divergence at the small-xi end (image not vanishing at the origin, e.g.
// a plain Gaussian) raises AdmissibilityError: the value is certified by
// halving xi_min and demanding relative agreement under 1%.
double admissibility_constant(const SL2Matrix& m, const SampledSignal& psi);

// Coefficients Phi(t, x) = <f, psi^m_{t,x}> over scale times position.
struct CoefficientField {
  LogScaleGrid scale_grid;
  std::shared_ptr<const WeightedMeasure> positions;
  SL2Matrix matrix;
  double mu = 0.0;
  // Admissibility constant of the wavelet that produced the field, or NaN
  // with admissible == false when its integral diverged.  Analysis is
  // legal either way; synthesis refuses non-admissible fields.
  double admissibility = 0.0;
  bool admissible = false;
  std::vector<Complex> values;  // row-major: scale index times positions

  std::size_t scales() const { return scale_grid.nodes.size(); }
  std::size_t width() const { return positions ? positions->size() : 0; }
  Complex at(std::size_t scale, std::size_t pos) const {
    return values[scale * width() + pos];
  }
};

// Total squared field mass against |x|^(2 mu + 1) dx t^-(2 mu+2) dt/t.
double field_energy(const CoefficientField& field);

struct OrthogonalityReport {
  Complex lhs;     // double scale-position integral of Phi_f conj(Phi_g)
  Complex rhs;     // C_psi <f, g>
  double residual = 0.0;
};

// Dense table of a signal's unchirped transform on a uniform argument
// grid, with interpolated lookup.  Scale loops need D psi at t lambda for
// every (t, lambda) pair; tabling once replaces millions of kernel
// integrals by local interpolation.
struct SpectrumTable {
  std::vector<double> args;
  std::vector<Complex> values;
  double cut = 0.0;  // |u| > cut reads as zero

  Complex at(double u) const;
};
SpectrumTable build_spectrum_table(const SampledSignal& psi);

// Reusable analyzer for one (matrix, wavelet, scale grid) triple.  The
// position grid is the wavelet's own grid; signals to analyze must share
// it.  Builds the kernel tables and the wavelet spectrum table once.
class WaveletTransformer {
 public:
  WaveletTransformer(const SL2Matrix& m, SampledSignal psi,
                     LogScaleGrid scale_grid);

  const SL2Matrix& matrix() const { return matrix_; }
  double mu() const;
  const LogScaleGrid& scale_grid() const { return scales_; }
  const std::shared_ptr<const WeightedMeasure>& positions() const {
    return positions_;
  }
  bool admissible() const { return admissible_; }
  // NaN when the admissibility integral diverged.
  double admissibility() const { return admissibility_; }
  double wavelet_norm2() const { return psi_norm2_; }
  const SampledSignal& wavelet() const { return psi_; }

  // Position-domain route: one classical transform of the chirp-stripped
  // signal, then per scale a spectral window and a kernel sum.
  CoefficientField analyze(const SampledSignal& f) const;

  // One row of analyze at an arbitrary scale, not restricted to the
  // configured scale grid.
  std::vector<Complex> coefficient_row(const SampledSignal& f,
                                       double t) const;

  // Spectral-factorization route: per scale, the coefficient spectrum is
  // assembled from the chirped transform of f by the factorization
  //   (1/c_mu) (-i t b)^(mu+1) e^(i d/(2b) (t lambda)^2)
  //     D^m f(-lambda) conj(G(-t lambda)),
  // then one inverse chirped transform recovers the row.
  CoefficientField analyze_spectral(const SampledSignal& f) const;

  // Inverse of analyze up to scale-grid truncation.  Throws ParameterError
  // when the field is not admissible or came from different parameters.
  SampledSignal synthesize(const CoefficientField& field) const;

  OrthogonalityReport orthogonality_check(const SampledSignal& f,
                                          const SampledSignal& g) const;

 private:
  std::vector<Complex> stripped_spectrum(const SampledSignal& f) const;
  void fill_row(const std::vector<Complex>& spec, double t,
                Complex* out) const;
  void require_signal(const SampledSignal& f) const;
  void require_admissible(const char* who) const;
  CoefficientField blank_field() const;

  SL2Matrix matrix_;
  SampledSignal psi_;
  LogScaleGrid scales_;
  std::shared_ptr<const WeightedMeasure> positions_;
  std::shared_ptr<const WeightedMeasure> spectral_;
  DunklPlan plan_;  // positions <-> classical spectral grid
  std::shared_ptr<const WeightedMeasure> chirped_spectral_;
  TransformPlan chirped_plan_;
  SpectrumTable dpsi_;
  double psi_norm2_ = 0.0;
  double admissibility_ = 0.0;
  bool admissible_ = false;
};

// One-shot wrappers around WaveletTransformer.
CoefficientField analyze(const SL2Matrix& m, const SampledSignal& f,
                         const SampledSignal& psi,
                         const LogScaleGrid& scale_grid);
CoefficientField analyze_spectral(const SL2Matrix& m, const SampledSignal& f,
                                  const SampledSignal& psi,
                                  const LogScaleGrid& scale_grid);
SampledSignal synthesize(const SL2Matrix& m, const CoefficientField& field,
                         const SampledSignal& psi);
OrthogonalityReport orthogonality_check(const SL2Matrix& m,
                                        const SampledSignal& f,
                                        const SampledSignal& g,
                                        const SampledSignal& psi,
                                        const LogScaleGrid& scale_grid);

// Default scale geometry: t in [1/128, 8], 80 log-spaced nodes.  Skewed
// low because coverage loss at the small-scale end grows like
// (lambda t_min)^2 while scales above 8 outrun the position quadrature.
LogScaleGrid default_scale_grid();

// Kernel entries (1/C_psi) <psi^m_{t,x}, psi^m2_{t',x'}> on the product of
// (scale, position-sample) pairs.  Row index flattens the left pair as
// scale * positions + position; columns flatten the right pair the same
// way.  sample_positions supplies both the x samples and the position
// weights used when the table reproduces a coefficient field.
struct ReproducingKernelTable {
  LogScaleGrid scale_grid;
  std::shared_ptr<const WeightedMeasure> sample_positions;
  SL2Matrix left_matrix;
  SL2Matrix right_matrix;
  double admissibility = 0.0;
  double bound = 0.0;  // ||psi||^2 / C_psi, pointwise modulus bound
  std::vector<Complex> entries;

  std::size_t pairs() const {
    return scale_grid.nodes.size() *
           (sample_positions ? sample_positions->size() : 0);
  }
  Complex entry(std::size_t left, std::size_t right) const {
    return entries[left * pairs() + right];
  }
};

ReproducingKernelTable reproducing_kernel(
    const SL2Matrix& m, const SL2Matrix& m2, const SampledSignal& psi,
    const LogScaleGrid& scale_grid,
    std::shared_ptr<const WeightedMeasure> sample_positions);

}  // namespace lcdw
