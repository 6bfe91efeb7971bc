// SPDX-License-Identifier: MIT
#include "lcdw/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lcdw/errors.hpp"
#include "lcdw/special_functions.hpp"
#include "lcdw/translation.hpp"

namespace lcdw {

namespace {

Complex unit_phase(double angle) {
  return Complex(std::cos(angle), std::sin(angle));
}

bool same_matrix(const SL2Matrix& a, const SL2Matrix& b) {
  return a.a == b.a && a.b == b.b && a.c == b.c && a.d == b.d;
}

bool same_geometry(const WeightedMeasure& a, const WeightedMeasure& b) {
  return a.size() == b.size() && a.mu() == b.mu() && a.radius() == b.radius() &&
         a.panels() == b.panels() && a.order() == b.order();
}

void require_scale(double t, const char* who) {
  if (!std::isfinite(t) || t <= 0.0)
    throw ParameterError(std::string(who) + ": scale must be positive");
}

std::shared_ptr<const WeightedMeasure> wavelet_grid(const SL2Matrix& m,
                                                    const SampledSignal& psi) {
  validate_matrix(m);
  if (m.b == 0.0)
    throw ParameterError(
        "wavelet: matrices with b = 0 reduce to dilations and have no "
        "wavelet family; apply dilate directly");
  if (!psi.measure)
    throw ParameterError("wavelet: mother wavelet carries no measure");
  return psi.measure;
}

void require_scale_grid(const LogScaleGrid& grid) {
  if (grid.nodes.empty() || grid.nodes.size() != grid.weights.size())
    throw ParameterError("wavelet: empty or inconsistent scale grid");
  for (double t : grid.nodes)
    if (!std::isfinite(t) || t <= 0.0)
      throw ParameterError("wavelet: scale nodes must be positive");
}

// Chirped family member on top of an already dilated wavelet.  Keeping the
// dilation outside lets batch callers reuse one interpolation per scale.
SampledSignal chirped_member(const TranslationEngine& engine,
                             const SL2Matrix& m, double x,
                             const SampledSignal& dilated) {
  SampledSignal moved = engine.translate_dunkl(x, dilated);
  const double half = 0.5 * m.a / m.b;
  const std::vector<double>& ys = dilated.measure->nodes();
  for (std::size_t i = 0; i < moved.values.size(); ++i)
    moved.values[i] *= unit_phase(-half * (ys[i] * ys[i] - x * x));
  return moved;
}

// Integral of |G(xi)|^2 dxi/xi over [xi_min, xi_max], where G is the chirped
// transform of the de-chirped wavelet, evaluated directly at log-spaced
// nodes.  The caller compares two lower cutoffs to certify convergence.
double admissibility_integral(const SL2Matrix& m, const SampledSignal& stripped,
                              double xi_min, double xi_max) {
  const double span = std::log(xi_max / xi_min);
  const std::size_t count = std::min<std::size_t>(
      4096, std::max<std::size_t>(64, static_cast<std::size_t>(96.0 * span)));
  LogScaleGrid grid = build_log_grid(xi_min, xi_max, count);
  std::vector<Complex> g = lcd_forward_at(m, stripped, grid.nodes);
  KahanAccumulator acc;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    acc.add(grid.weights[i] * std::norm(g[i]));
  return acc.value();
}

}  // namespace

MotherWavelet make_wavelet(SampledSignal psi) {
  if (!psi.measure)
    throw ParameterError("make_wavelet: signal carries no measure");
  const double norm = norm_p(psi, 2.0);
  if (!std::isfinite(norm) || norm <= 0.0)
    throw ParameterError("make_wavelet: wavelet needs a finite nonzero norm");
  return MotherWavelet{std::move(psi)};
}

SampledSignal dilate(double t, const SampledSignal& psi) {
  if (!psi.measure) throw ParameterError("dilate: signal carries no measure");
  require_scale(t, "dilate");
  SampledSignal out;
  out.measure = psi.measure;
  if (t == 1.0) {
    out.values = psi.values;
    return out;
  }
  const WeightedMeasure& grid = *psi.measure;
  const double amp = std::pow(t, -(grid.mu() + 1.0));
  out.values.reserve(grid.size());
  for (double y : grid.nodes())
    out.values.push_back(amp * interpolate(grid.nodes(), psi.values, y / t, 6,
                                           OutsidePolicy::kZero));
  return out;
}

FamilyMember family_member(const SL2Matrix& m, double t, double x,
                           const SampledSignal& psi) {
  std::shared_ptr<const WeightedMeasure> grid = wavelet_grid(m, psi);
  require_scale(t, "family_member");
  if (!std::isfinite(x))
    throw ParameterError("family_member: position must be finite");
  TranslationEngine engine(grid);
  SampledSignal scaled = dilate(t, psi);
  return FamilyMember{t, x, m, chirped_member(engine, m, x, scaled)};
}

double admissibility_constant(const SL2Matrix& m, const SampledSignal& psi) {
  std::shared_ptr<const WeightedMeasure> grid = wavelet_grid(m, psi);
  const double norm = norm_p(psi, 2.0);
  if (!std::isfinite(norm) || norm <= 0.0)
    throw ParameterError("admissibility_constant: wavelet needs a finite "
                         "nonzero norm");
  const double mu = grid->mu();
  const double half = 0.5 * m.a / m.b;

  SampledSignal stripped;
  stripped.measure = grid;
  stripped.values.reserve(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double y = grid->nodes()[i];
    stripped.values.push_back(unit_phase(-half * y * y) * psi.values[i]);
  }

  // The composite rule integrates oscillations of about 0.7 * order radians
  // per unit panel width; past that the kernel sums return aliasing noise
  // instead of the tiny true values, and at small mu the noise does not even
  // decay with xi.  Everything here must stay inside that band or the tail
  // of the xi integral fills up with garbage.
  const double panel_width = 2.0 * grid->radius() / grid->panels();
  const double xi_cap = 0.7 * grid->order() / panel_width * std::abs(m.b);

  double peak = 0.0;
  double xi_live = 0.0;
  for (double xi = xi_cap / 1024.0; xi <= xi_cap; xi *= 2.0) {
    const Complex g = lcd_forward_at(m, stripped, {xi}).front();
    if (!std::isfinite(std::abs(g)))
      throw NumericalError("admissibility_constant: spectrum overflowed");
    peak = std::max(peak, std::abs(g));
    if (std::abs(g) > 1e-9 * peak) xi_live = xi;
  }
  if (peak <= 0.0)
    throw NumericalError("admissibility_constant: spectrum vanished at every "
                         "probe");
  const Complex edge = lcd_forward_at(m, stripped, {xi_cap}).front();
  if (std::abs(edge) > 1e-6 * peak)
    throw NumericalError(
        "admissibility_constant: the wavelet spectrum has not decayed within "
        "the band the sample grid resolves; refine the grid");
  const double xi_max = std::min(std::max(2.0 * xi_live, 8.0 * std::abs(m.b)),
                                 xi_cap);

  const double xi_min = 1e-3 * std::abs(m.b);
  const double base = admissibility_integral(m, stripped, xi_min, xi_max);
  if (!std::isfinite(base) || base <= 0.0)
    throw NumericalError("admissibility_constant: integral did not evaluate");

  // Certify convergence at the lower limit: halving the cutoff must not move
  // the value.  A wavelet with nonzero mean has |G| bounded away from zero
  // near the origin and the integral grows like log(1/xi_min).
  const double refined =
      admissibility_integral(m, stripped, 0.5 * xi_min, xi_max);
  if (std::abs(refined - base) > 0.01 * base)
    throw AdmissibilityError(
        "admissibility_constant: the scale integral keeps growing as the "
        "lower cutoff shrinks; the wavelet has nonzero mean and is not "
        "admissible");

  const double cmu = dunkl_normalization(mu);
  return std::pow(std::abs(m.b), 2.0 * mu + 2.0) * refined / (cmu * cmu);
}

double field_energy(const CoefficientField& field) {
  if (!field.positions)
    throw ParameterError("field_energy: field carries no position measure");
  if (field.values.size() != field.scales() * field.width())
    throw ParameterError("field_energy: field storage is inconsistent");
  const std::vector<double>& ww = field.positions->weighted_weights();
  KahanAccumulator acc;
  for (std::size_t s = 0; s < field.scales(); ++s) {
    const double t = field.scale_grid.nodes[s];
    const double nu =
        field.scale_grid.weights[s] * std::pow(t, -(2.0 * field.mu + 2.0));
    for (std::size_t j = 0; j < field.width(); ++j)
      acc.add(nu * ww[j] * std::norm(field.at(s, j)));
  }
  return acc.value();
}

Complex SpectrumTable::at(double u) const {
  if (!(std::abs(u) <= cut)) return Complex(0.0, 0.0);
  return interpolate(args, values, u, 6, OutsidePolicy::kZero);
}

SpectrumTable build_spectrum_table(const SampledSignal& psi) {
  if (!psi.measure)
    throw ParameterError("build_spectrum_table: signal carries no measure");

  // Coarse scan to find the support of the transform, both signs because the
  // wavelet may be complex.  The scan stops at the band the quadrature can
  // resolve (about 0.7 * order radians per unit panel width); beyond it the
  // sums alias and the values are noise, so the table treats them as zero.
  // Within the band the noise floor sits near 1e-14 of the peak, hence the
  // 1e-12 live-support test.
  const WeightedMeasure& g = *psi.measure;
  const double band = 0.7 * g.order() * g.panels() / (2.0 * g.radius());
  std::vector<double> scan;
  for (double u = -band; u <= band + 0.25; u += 0.5) scan.push_back(u);
  std::vector<Complex> coarse = dunkl_forward_at(psi, scan);
  double peak = 0.0;
  for (const Complex& v : coarse) peak = std::max(peak, std::abs(v));
  if (!std::isfinite(peak))
    throw NumericalError("build_spectrum_table: transform overflowed");
  double live = 4.0;
  for (std::size_t i = 0; i < scan.size(); ++i)
    if (std::abs(coarse[i]) > 1e-12 * peak)
      live = std::max(live, std::abs(scan[i]));

  const double step = 0.02;
  const std::size_t half = static_cast<std::size_t>(
      std::ceil((std::min(live + 1.0, band) / step)));
  SpectrumTable table;
  table.cut = static_cast<double>(half) * step;
  table.args.reserve(2 * half + 1);
  for (std::size_t k = 0; k <= 2 * half; ++k)
    table.args.push_back((static_cast<double>(k) - static_cast<double>(half)) *
                         step);
  table.values = dunkl_forward_at(psi, table.args);
  return table;
}

WaveletTransformer::WaveletTransformer(const SL2Matrix& m, SampledSignal psi,
                                       LogScaleGrid scale_grid)
    : matrix_(m),
      psi_(std::move(psi)),
      scales_(std::move(scale_grid)),
      positions_(wavelet_grid(m, psi_)),
      spectral_(default_spectrum_measure(SL2Matrix{}, *positions_)),
      plan_(positions_, spectral_),
      chirped_spectral_(default_spectrum_measure(matrix_, *positions_)),
      chirped_plan_(matrix_, positions_, chirped_spectral_),
      dpsi_(build_spectrum_table(psi_)) {
  require_scale_grid(scales_);
  const double psi_norm = norm_p(psi_, 2.0);
  psi_norm2_ = psi_norm * psi_norm;
  if (!std::isfinite(psi_norm2_) || psi_norm2_ <= 0.0)
    throw ParameterError("WaveletTransformer: wavelet needs a finite nonzero "
                         "norm");
  try {
    admissibility_ = admissibility_constant(matrix_, psi_);
    admissible_ = true;
  } catch (const AdmissibilityError&) {
    admissibility_ = std::numeric_limits<double>::quiet_NaN();
    admissible_ = false;
  }
}

double WaveletTransformer::mu() const { return positions_->mu(); }

void WaveletTransformer::require_signal(const SampledSignal& f) const {
  if (!f.measure)
    throw ParameterError("WaveletTransformer: signal carries no measure");
  if (!same_geometry(*f.measure, *positions_) ||
      f.values.size() != positions_->size())
    throw ParameterError(
        "WaveletTransformer: signal grid does not match the wavelet grid");
}

void WaveletTransformer::require_admissible(const char* who) const {
  if (!admissible_)
    throw ParameterError(std::string(who) +
                         ": the mother wavelet is not admissible, so the "
                         "inversion constant is undefined");
}

CoefficientField WaveletTransformer::blank_field() const {
  CoefficientField field;
  field.scale_grid = scales_;
  field.positions = positions_;
  field.matrix = matrix_;
  field.mu = positions_->mu();
  field.admissibility = admissibility_;
  field.admissible = admissible_;
  field.values.assign(scales_.nodes.size() * positions_->size(),
                      Complex(0.0, 0.0));
  return field;
}

std::vector<Complex> WaveletTransformer::stripped_spectrum(
    const SampledSignal& f) const {
  const double half = 0.5 * matrix_.a / matrix_.b;
  const std::vector<double>& ys = positions_->nodes();
  std::vector<Complex> chirped(f.values.size());
  for (std::size_t i = 0; i < chirped.size(); ++i)
    chirped[i] = unit_phase(half * ys[i] * ys[i]) * f.values[i];
  return plan_.forward(chirped);
}

// Coefficients through the position-domain pairing: the chirps move onto
// the signal, leaving a classical inner product against translated
// dilates, which Parseval turns into one spectral sum per position.  The
// dilate enters only through its transform sampled at t*lambda, so large
// scales stay accurate even when t^(-mu-1) psi(y/t) no longer fits the
// grid.
void WaveletTransformer::fill_row(const std::vector<Complex>& spec, double t,
                                  Complex* out) const {
  const double mu = positions_->mu();
  const double half = 0.5 * matrix_.a / matrix_.b;
  const std::vector<double>& lambdas = spectral_->nodes();
  const std::vector<double>& ww = spectral_->weighted_weights();
  const std::vector<double>& xs = positions_->nodes();
  const KernelTable& table = plan_.table();

  std::vector<Complex> filtered(lambdas.size());
  const double amp = std::pow(t, mu + 1.0);
  for (std::size_t i = 0; i < filtered.size(); ++i)
    filtered[i] = ww[i] * spec[i] * (amp * std::conj(dpsi_.at(t * lambdas[i])));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    KahanAccumulator re, im;
    for (std::size_t i = 0; i < filtered.size(); ++i) {
      const Complex term = filtered[i] * table.value(i, j);
      re.add(term.real());
      im.add(term.imag());
    }
    out[j] =
        unit_phase(-half * xs[j] * xs[j]) * Complex(re.value(), im.value());
  }
}

CoefficientField WaveletTransformer::analyze(const SampledSignal& f) const {
  require_signal(f);
  CoefficientField field = blank_field();
  const std::vector<Complex> spec = stripped_spectrum(f);
  for (std::size_t s = 0; s < scales_.nodes.size(); ++s)
    fill_row(spec, scales_.nodes[s],
             field.values.data() + s * positions_->size());
  return field;
}

std::vector<Complex> WaveletTransformer::coefficient_row(
    const SampledSignal& f, double t) const {
  require_signal(f);
  require_scale(t, "coefficient_row");
  std::vector<Complex> row(positions_->size());
  fill_row(stripped_spectrum(f), t, row.data());
  return row;
}

CoefficientField WaveletTransformer::analyze_spectral(
    const SampledSignal& f) const {
  require_signal(f);
  CoefficientField field = blank_field();

  // Same coefficients from the other side: the chirped transform of the row
  // x -> Phi(t, x) factorizes into the chirped transform of the signal times
  // the conjugated spectrum of the de-chirped wavelet, so each row is one
  // multiplication in the chirped domain followed by an inverse transform.
  const Spectrum ff = chirped_plan_.forward(f);
  const WeightedMeasure& sg = *chirped_spectral_;
  const double mu = sg.mu();
  const double cmu = dunkl_normalization(mu);
  const double b = matrix_.b;
  const double half_d = 0.5 * matrix_.d / b;
  const Complex ib_pow = complex_power_principal(Complex(0.0, b), mu + 1.0);

  std::vector<Complex> st(sg.size());
  for (std::size_t s = 0; s < scales_.nodes.size(); ++s) {
    const double t = scales_.nodes[s];
    const Complex front =
        complex_power_principal(Complex(0.0, -t * b), mu + 1.0) / cmu;
    for (std::size_t i = 0; i < sg.size(); ++i) {
      const double tl = t * sg.nodes()[i];
      const Complex g =
          unit_phase(half_d * tl * tl) * dpsi_.at(-tl / b) / ib_pow;
      st[i] = front * unit_phase(half_d * tl * tl) *
              ff.signal.values[sg.mirror_index(i)] * std::conj(g);
    }
    Spectrum row;
    row.matrix = matrix_;
    row.signal.measure = chirped_spectral_;
    row.signal.values = st;
    SampledSignal phi = chirped_plan_.inverse(row);
    std::copy(phi.values.begin(), phi.values.end(),
              field.values.begin() + static_cast<std::ptrdiff_t>(
                                         s * positions_->size()));
  }
  return field;
}

SampledSignal WaveletTransformer::synthesize(
    const CoefficientField& field) const {
  require_admissible("synthesize");
  if (!field.positions || !same_geometry(*field.positions, *positions_) ||
      !same_matrix(field.matrix, matrix_) ||
      field.scale_grid.nodes != scales_.nodes ||
      field.values.size() != field.scales() * positions_->size())
    throw ParameterError(
        "synthesize: coefficient field does not match this transformer");
  if (!field.admissible)
    throw ParameterError(
        "synthesize: field was produced by a non admissible wavelet");

  const double mu = positions_->mu();
  const double half = 0.5 * matrix_.a / matrix_.b;
  const std::vector<double>& lambdas = spectral_->nodes();
  const std::vector<double>& xs = positions_->nodes();
  const std::vector<double>& wwx = positions_->weighted_weights();
  const KernelTable& table = plan_.table();

  // Superposing members directly costs scales * positions * grid kernel
  // sums.  Regrouping through the spectral side costs the same per scale but
  // collapses the final assembly into a single inverse transform.
  std::vector<Complex> acc(lambdas.size(), Complex(0.0, 0.0));
  std::vector<Complex> rechirped(xs.size());
  for (std::size_t s = 0; s < scales_.nodes.size(); ++s) {
    const double t = scales_.nodes[s];
    const double nu = scales_.weights[s] * std::pow(t, -(mu + 1.0));
    for (std::size_t j = 0; j < xs.size(); ++j)
      rechirped[j] =
          field.at(s, j) * unit_phase(half * xs[j] * xs[j]) * wwx[j];
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const Complex weight = nu * dpsi_.at(t * lambdas[i]);
      if (weight == Complex(0.0, 0.0)) continue;
      Complex inner(0.0, 0.0);
      for (std::size_t j = 0; j < xs.size(); ++j)
        inner += rechirped[j] * std::conj(table.value(i, j));
      acc[i] += weight * inner;
    }
  }

  std::vector<Complex> assembled = plan_.inverse(acc);
  SampledSignal out;
  out.measure = positions_;
  out.values.reserve(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    out.values.push_back(unit_phase(-half * xs[j] * xs[j]) * assembled[j] /
                         admissibility_);
  return out;
}

OrthogonalityReport WaveletTransformer::orthogonality_check(
    const SampledSignal& f, const SampledSignal& g) const {
  require_admissible("orthogonality_check");
  const CoefficientField ff = analyze(f);
  const CoefficientField fg = (&f == &g) ? ff : analyze(g);

  const std::vector<double>& ww = positions_->weighted_weights();
  const double mu = positions_->mu();
  KahanAccumulator re, im;
  for (std::size_t s = 0; s < scales_.nodes.size(); ++s) {
    const double t = scales_.nodes[s];
    const double nu = scales_.weights[s] * std::pow(t, -(2.0 * mu + 2.0));
    for (std::size_t j = 0; j < positions_->size(); ++j) {
      const Complex term = nu * ww[j] * ff.at(s, j) * std::conj(fg.at(s, j));
      re.add(term.real());
      im.add(term.imag());
    }
  }

  OrthogonalityReport report;
  report.lhs = Complex(re.value(), im.value());
  report.rhs = admissibility_ * inner_product(f, g);
  report.residual =
      std::abs(report.lhs - report.rhs) / (std::abs(report.rhs) + 1e-300);
  return report;
}

CoefficientField analyze(const SL2Matrix& m, const SampledSignal& f,
                         const SampledSignal& psi,
                         const LogScaleGrid& scale_grid) {
  return WaveletTransformer(m, psi, scale_grid).analyze(f);
}

CoefficientField analyze_spectral(const SL2Matrix& m, const SampledSignal& f,
                                  const SampledSignal& psi,
                                  const LogScaleGrid& scale_grid) {
  return WaveletTransformer(m, psi, scale_grid).analyze_spectral(f);
}

SampledSignal synthesize(const SL2Matrix& m, const CoefficientField& field,
                         const SampledSignal& psi) {
  return WaveletTransformer(m, psi, field.scale_grid).synthesize(field);
}

OrthogonalityReport orthogonality_check(const SL2Matrix& m,
                                        const SampledSignal& f,
                                        const SampledSignal& g,
                                        const SampledSignal& psi,
                                        const LogScaleGrid& scale_grid) {
  return WaveletTransformer(m, psi, scale_grid).orthogonality_check(f, g);
}

// Small scales must reach far enough down that the highest spectral content
// a default grid carries (|lambda| ~ 10 once chirps spread the spectrum)
// still falls inside the covered band u = t * lambda; the coverage deficit
// at the small-scale end grows like (lambda * t_min)^2.  Large scales stop
// at 8 because beyond that the wavelet's spectral bump narrows past what
// the default position quadrature resolves.
LogScaleGrid default_scale_grid() {
  return build_log_grid(1.0 / 128.0, 8.0, 80);
}

ReproducingKernelTable reproducing_kernel(
    const SL2Matrix& m, const SL2Matrix& m2, const SampledSignal& psi,
    const LogScaleGrid& scale_grid,
    std::shared_ptr<const WeightedMeasure> sample_positions) {
  std::shared_ptr<const WeightedMeasure> grid = wavelet_grid(m, psi);
  wavelet_grid(m2, psi);
  require_scale_grid(scale_grid);
  if (!sample_positions)
    throw ParameterError("reproducing_kernel: sample positions are required");

  // A non admissible wavelet has no reproducing kernel; let the constant
  // computation raise the explanatory error.
  const double constant = admissibility_constant(m, psi);
  const double norm = norm_p(psi, 2.0);

  TranslationEngine engine(grid);
  auto build = [&](const SL2Matrix& mm) {
    std::vector<SampledSignal> members;
    members.reserve(scale_grid.nodes.size() * sample_positions->size());
    for (double t : scale_grid.nodes) {
      const SampledSignal scaled = dilate(t, psi);
      for (double x : sample_positions->nodes())
        members.push_back(chirped_member(engine, mm, x, scaled));
    }
    return members;
  };
  const std::vector<SampledSignal> left = build(m);
  const std::vector<SampledSignal> right =
      same_matrix(m, m2) ? left : build(m2);

  ReproducingKernelTable table;
  table.scale_grid = scale_grid;
  table.sample_positions = std::move(sample_positions);
  table.left_matrix = m;
  table.right_matrix = m2;
  table.admissibility = constant;
  table.bound = norm * norm / constant;
  table.entries.reserve(left.size() * right.size());
  for (const SampledSignal& u : left)
    for (const SampledSignal& v : right)
      table.entries.push_back(inner_product(u, v) / constant);
  return table;
}

}  // namespace lcdw
