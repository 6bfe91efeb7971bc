// SPDX-License-Identifier: Apache-2.0
#include "lcdw/lcdt.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "lcdw/errors.hpp"

namespace lcdw {
namespace {

constexpr double kPi = 3.14159265358979323846;

Complex unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// One output row of a kernel integral: sum_j kernel_j * g_j * ww_j with
// compensated accumulation.  Every transform below funnels through this so
// the plan-based and direct paths sum in the same order.
Complex kernel_row_sum(const Complex* kernel, const Complex* g,
                       const double* ww, std::size_t n) {
  KahanAccumulator re;
  KahanAccumulator im;
  for (std::size_t j = 0; j < n; ++j) {
    Complex t = kernel[j] * g[j];
    re.add(t.real() * ww[j]);
    im.add(t.imag() * ww[j]);
  }
  return {re.value(), im.value()};
}

// Same reduction with the kernel conjugated and strided, for the inverse
// direction that walks a table column.
Complex kernel_col_sum_conj(const KernelTable& table, std::size_t col,
                            const Complex* g, const double* ww) {
  KahanAccumulator re;
  KahanAccumulator im;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    Complex t = std::conj(table.value(i, col)) * g[i];
    re.add(t.real() * ww[i]);
    im.add(t.imag() * ww[i]);
  }
  return {re.value(), im.value()};
}

std::vector<Complex> chirp_vector(const std::vector<double>& nodes,
                                  double half_coeff) {
  std::vector<Complex> out;
  out.reserve(nodes.size());
  for (double y : nodes) out.push_back(unit_phase(half_coeff * y * y));
  return out;
}

}  // namespace

void validate_matrix(const SL2Matrix& m) {
  if (!std::isfinite(m.a) || !std::isfinite(m.b) || !std::isfinite(m.c) ||
      !std::isfinite(m.d))
    throw ParameterError("matrix entries must be finite");
  double det = m.a * m.d - m.b * m.c;
  if (std::abs(det - 1.0) > 1e-12)
    throw ParameterError("matrix determinant must be 1, got " +
                         std::to_string(det));
}

SL2Matrix invert_matrix(const SL2Matrix& m) { return {m.d, -m.b, -m.c, m.a}; }

double dunkl_normalization(double mu) {
  return 1.0 / (std::pow(2.0, mu + 1.0) * gamma_fn(mu + 1.0));
}

Complex lcd_kernel(double mu, const SL2Matrix& m, double x, double y) {
  if (m.b == 0.0)
    throw ParameterError("lcd_kernel: the integral kernel needs b != 0");
  double phase = 0.5 * ((m.d / m.b) * x * x + (m.a / m.b) * y * y);
  return unit_phase(phase) * dunkl_kernel(mu, -x * y / m.b);
}

Complex lcd_prefactor(double mu, const SL2Matrix& m) {
  if (m.b == 0.0)
    throw ParameterError("lcd_prefactor: b must be nonzero");
  return 1.0 / (gamma_fn(mu + 1.0) *
                complex_power_principal(Complex(0.0, 2.0 * m.b), mu + 1.0));
}

KernelTable::KernelTable(double mu, const std::vector<double>& out_nodes,
                         const std::vector<double>& in_nodes, double factor)
    : rows_(out_nodes.size()), cols_(in_nodes.size()) {
  values_.reserve(rows_ * cols_);
  for (double x : out_nodes)
    for (double y : in_nodes) values_.push_back(dunkl_kernel(mu, factor * x * y));
}

DunklPlan::DunklPlan(std::shared_ptr<const WeightedMeasure> signal_grid,
                     std::shared_ptr<const WeightedMeasure> spectral_grid)
    : signal_(std::move(signal_grid)),
      spectral_(std::move(spectral_grid)),
      table_(signal_->mu(), spectral_->nodes(), signal_->nodes(), -1.0),
      cmu_(dunkl_normalization(signal_->mu())) {
  if (signal_->mu() != spectral_->mu())
    throw ParameterError("DunklPlan: grids carry different orders");
}

std::vector<Complex> DunklPlan::forward(const std::vector<Complex>& f) const {
  if (f.size() != signal_->size())
    throw ParameterError("DunklPlan::forward: size mismatch");
  std::vector<Complex> out;
  out.reserve(spectral_->size());
  const double* ww = signal_->weighted_weights().data();
  for (std::size_t i = 0; i < spectral_->size(); ++i)
    out.push_back(cmu_ * kernel_row_sum(table_.row(i), f.data(), ww, f.size()));
  return out;
}

std::vector<Complex> DunklPlan::inverse(
    const std::vector<Complex>& spectrum) const {
  if (spectrum.size() != spectral_->size())
    throw ParameterError("DunklPlan::inverse: size mismatch");
  std::vector<Complex> out;
  out.reserve(signal_->size());
  const double* ww = spectral_->weighted_weights().data();
  for (std::size_t j = 0; j < signal_->size(); ++j)
    out.push_back(cmu_ * kernel_col_sum_conj(table_, j, spectrum.data(), ww));
  return out;
}

TransformPlan::TransformPlan(const SL2Matrix& m,
                             std::shared_ptr<const WeightedMeasure> signal_grid,
                             std::shared_ptr<const WeightedMeasure> spectral_grid)
    : matrix_(m),
      signal_(std::move(signal_grid)),
      spectral_(std::move(spectral_grid)),
      table_(signal_->mu(), spectral_->nodes(), signal_->nodes(),
             m.b != 0.0 ? -1.0 / m.b : 0.0),
      prefactor_(0.0, 0.0) {
  validate_matrix(m);
  if (m.b == 0.0)
    throw ParameterError(
        "TransformPlan: b = 0 has no integral kernel; use lcd_forward");
  if (signal_->mu() != spectral_->mu())
    throw ParameterError("TransformPlan: grids carry different orders");
  prefactor_ = lcd_prefactor(signal_->mu(), m);
  in_chirp_ = chirp_vector(signal_->nodes(), 0.5 * m.a / m.b);
  out_chirp_ = chirp_vector(spectral_->nodes(), 0.5 * m.d / m.b);
}

Spectrum TransformPlan::forward(const SampledSignal& f) const {
  if (f.values.size() != signal_->size())
    throw ParameterError("TransformPlan::forward: size mismatch");
  std::vector<Complex> g(f.values.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = in_chirp_[j] * f.values[j];

  Spectrum s;
  s.matrix = matrix_;
  s.signal.measure = spectral_;
  s.signal.values.reserve(spectral_->size());
  const double* ww = signal_->weighted_weights().data();
  for (std::size_t i = 0; i < spectral_->size(); ++i) {
    Complex acc = kernel_row_sum(table_.row(i), g.data(), ww, g.size());
    s.signal.values.push_back(prefactor_ * out_chirp_[i] * acc);
  }
  return s;
}

SampledSignal TransformPlan::inverse(const Spectrum& s) const {
  if (s.signal.values.size() != spectral_->size())
    throw ParameterError("TransformPlan::inverse: size mismatch");
  // Forward transform under the inverse matrix: conjugate kernel, conjugate
  // chirps, prefactor evaluated at -b.
  Complex pref = lcd_prefactor(signal_->mu(), invert_matrix(matrix_));
  std::vector<Complex> g(spectral_->size());
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = std::conj(out_chirp_[i]) * s.signal.values[i];

  SampledSignal out;
  out.measure = signal_;
  out.values.reserve(signal_->size());
  const double* ww = spectral_->weighted_weights().data();
  for (std::size_t j = 0; j < signal_->size(); ++j) {
    Complex acc = kernel_col_sum_conj(table_, j, g.data(), ww);
    out.values.push_back(pref * std::conj(in_chirp_[j]) * acc);
  }
  return out;
}

std::vector<Complex> dunkl_forward_at(const SampledSignal& f,
                                      const std::vector<double>& out_nodes) {
  const WeightedMeasure& m = *f.measure;
  double cmu = dunkl_normalization(m.mu());
  const double* ww = m.weighted_weights().data();
  std::vector<Complex> out;
  out.reserve(out_nodes.size());
  std::vector<Complex> krow(m.size());
  for (double x : out_nodes) {
    for (std::size_t j = 0; j < m.size(); ++j)
      krow[j] = dunkl_kernel(m.mu(), -x * m.nodes()[j]);
    out.push_back(cmu * kernel_row_sum(krow.data(), f.values.data(), ww,
                                       m.size()));
  }
  return out;
}

std::vector<Complex> dunkl_inverse_at(const SampledSignal& f,
                                      const std::vector<double>& out_nodes) {
  const WeightedMeasure& m = *f.measure;
  double cmu = dunkl_normalization(m.mu());
  const double* ww = m.weighted_weights().data();
  std::vector<Complex> out;
  out.reserve(out_nodes.size());
  std::vector<Complex> krow(m.size());
  for (double x : out_nodes) {
    for (std::size_t j = 0; j < m.size(); ++j)
      krow[j] = dunkl_kernel(m.mu(), x * m.nodes()[j]);
    out.push_back(cmu * kernel_row_sum(krow.data(), f.values.data(), ww,
                                       m.size()));
  }
  return out;
}

std::vector<Complex> lcd_forward_at(const SL2Matrix& m, const SampledSignal& f,
                                    const std::vector<double>& out_nodes) {
  validate_matrix(m);
  const WeightedMeasure& grid = *f.measure;
  double mu = grid.mu();

  if (m.b == 0.0) {
    // Dilation branch: a chirp times a rescaling, no integral.  Points in
    // the sliver between the outermost node and the grid radius are
    // extrapolated by the clamped stencil; beyond the radius the sample
    // genuinely does not determine the value.
    double scale = std::pow(std::abs(m.a), -(mu + 1.0));
    std::vector<Complex> out;
    out.reserve(out_nodes.size());
    for (double x : out_nodes) {
      if (std::abs(x / m.a) > grid.radius())
        throw RangeError("lcd_forward_at: dilation preimage " +
                         std::to_string(x / m.a) +
                         " lies outside the sampled support");
      Complex v = interpolate(grid.nodes(), f.values, x / m.a, 4,
                              OutsidePolicy::kExtrapolate);
      out.push_back(unit_phase(0.5 * (m.c / m.a) * x * x) * v * scale);
    }
    return out;
  }

  // Factored exactly as in TransformPlan so the two paths round alike.
  Complex pref = lcd_prefactor(mu, m);
  double factor = -1.0 / m.b;
  double half_in = 0.5 * m.a / m.b;
  double half_out = 0.5 * m.d / m.b;
  std::vector<Complex> g(f.values.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    double y = grid.nodes()[j];
    g[j] = unit_phase(half_in * y * y) * f.values[j];
  }

  const double* ww = grid.weighted_weights().data();
  std::vector<Complex> out;
  out.reserve(out_nodes.size());
  std::vector<Complex> krow(grid.size());
  for (double x : out_nodes) {
    for (std::size_t j = 0; j < grid.size(); ++j)
      krow[j] = dunkl_kernel(mu, factor * x * grid.nodes()[j]);
    Complex acc = kernel_row_sum(krow.data(), g.data(), ww, grid.size());
    out.push_back(pref * unit_phase(half_out * x * x) * acc);
  }
  return out;
}

std::shared_ptr<const WeightedMeasure> default_spectrum_measure(
    const SL2Matrix& m, const WeightedMeasure& in) {
  validate_matrix(m);
  if (in.panels() <= 0 || in.order() <= 0)
    throw ParameterError(
        "default_spectrum_measure: input grid has no panel structure");
  double factor = (m.b == 0.0) ? std::abs(m.a)
                               : std::max(1.0, 1.0 / std::abs(m.b));
  int panels = static_cast<int>(std::ceil(in.panels() * factor));
  if (panels % 2) ++panels;
  panels = std::max(panels, in.panels());
  return std::make_shared<WeightedMeasure>(
      in.mu(), build_grid(in.radius() * factor, panels, in.order()));
}

Spectrum lcd_forward(const SL2Matrix& m, const SampledSignal& f,
                     std::shared_ptr<const WeightedMeasure> out_measure) {
  validate_matrix(m);
  if (!out_measure) out_measure = default_spectrum_measure(m, *f.measure);
  Spectrum s;
  s.matrix = m;
  s.signal.values = lcd_forward_at(m, f, out_measure->nodes());
  s.signal.measure = std::move(out_measure);
  return s;
}

SampledSignal lcd_inverse(const Spectrum& s,
                          std::shared_ptr<const WeightedMeasure> out_measure) {
  if (!out_measure)
    throw ParameterError("lcd_inverse: output grid is required");
  SampledSignal out;
  out.values =
      lcd_forward_at(invert_matrix(s.matrix), s.signal, out_measure->nodes());
  out.measure = std::move(out_measure);
  return out;
}

double parseval_cross_check(const SampledSignal& f, const SampledSignal& g,
                            const Spectrum& ff, const Spectrum& fg) {
  Complex direct = inner_product(f, g);
  Complex spectral = inner_product(ff.signal, fg.signal);
  double scale = std::max(norm_p(f, 2.0) * norm_p(g, 2.0), 1e-300);
  return std::abs(direct - spectral) / scale;
}

ResolutionReport check_sampling_resolution(const SL2Matrix& m,
                                           const WeightedMeasure& in,
                                           const std::vector<double>& out_nodes) {
  if (m.b == 0.0) return {0.0, true};
  double max_out = 0.0;
  for (double x : out_nodes) max_out = std::max(max_out, std::abs(x));
  // Instantaneous frequency bound of kernel times input chirp, in radians
  // per unit length.
  double rate = (max_out + std::abs(m.a) * in.radius()) / std::abs(m.b);
  // Nodes per panel set the resolving power; the per-node phase increment
  // pi/2 (about four nodes per wavelength) is where panel-wise rules still
  // hold spectral accuracy with a comfortable margin.
  double spacing = (in.panels() > 0 && in.order() > 0)
                       ? (2.0 * in.radius() / in.panels()) / in.order()
                       : in.max_spacing();
  double step = rate * spacing;
  return {step, step <= 0.5 * kPi};
}

}  // namespace lcdw
