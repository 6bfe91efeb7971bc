// SPDX-License-Identifier: Apache-2.0
#include "lcdw/translation.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcdw/errors.hpp"
#include "lcdw/special_functions.hpp"

namespace lcdw {
namespace {

Complex unit_phase(double angle) {
  return Complex(std::cos(angle), std::sin(angle));
}

std::shared_ptr<const WeightedMeasure> require_measure(
    std::shared_ptr<const WeightedMeasure> grid) {
  if (!grid) throw ParameterError("TranslationEngine: grid must not be null");
  return grid;
}

// Same geometry, not just same node count: 16 panels of order 8 and 8
// panels of order 16 both have 128 nodes but different node positions.
bool same_geometry(const WeightedMeasure& lhs, const WeightedMeasure& rhs) {
  return lhs.size() == rhs.size() && lhs.mu() == rhs.mu() &&
         lhs.radius() == rhs.radius() && lhs.panels() == rhs.panels() &&
         lhs.order() == rhs.order();
}

void require_engine_grid(const WeightedMeasure& grid, const SampledSignal& f) {
  if (!f.measure) throw ParameterError("translate: signal has no measure");
  if (!same_geometry(grid, *f.measure))
    throw ParameterError("translate: signal grid does not match the engine grid");
}

void require_common_grid(const SampledSignal& f, const SampledSignal& g) {
  if (!f.measure || !g.measure)
    throw ParameterError("convolve: both signals need a measure");
  if (!same_geometry(*f.measure, *g.measure))
    throw ParameterError("convolve: signals must live on one common grid");
}

void require_offset(double x) {
  if (!std::isfinite(x))
    throw ParameterError("translate: offset must be finite");
}

// Multiplies each sample by exp(i sign * half * y^2) on the grid nodes.
std::vector<Complex> chirped_values(const WeightedMeasure& grid,
                                    const std::vector<Complex>& values,
                                    double half, double sign) {
  const std::vector<double>& ys = grid.nodes();
  std::vector<Complex> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = unit_phase(sign * half * ys[i] * ys[i]) * values[i];
  return out;
}

double require_chirp_half(const SL2Matrix& m, const char* who) {
  validate_matrix(m);
  if (m.b == 0.0)
    throw ParameterError(std::string(who) +
                         ": dilation matrices (b = 0) have no chirped variant");
  return 0.5 * m.d / m.b;
}

double holder_reciprocal(double p, const char* name) {
  if (std::isnan(p) || p < 1.0)
    throw ParameterError(std::string("young_check: exponent ") + name +
                         " must lie in [1, inf]");
  return std::isinf(p) ? 0.0 : 1.0 / p;
}

}  // namespace

TranslationEngine::TranslationEngine(
    std::shared_ptr<const WeightedMeasure> grid,
    std::shared_ptr<const WeightedMeasure> spectral_grid)
    : grid_(require_measure(std::move(grid))),
      spectral_grid_(spectral_grid
                         ? std::move(spectral_grid)
                         : default_spectrum_measure(SL2Matrix{}, *grid_)),
      plan_(grid_, spectral_grid_) {}

SampledSignal TranslationEngine::translate_dunkl(double x,
                                                 const SampledSignal& f) const {
  require_engine_grid(*grid_, f);
  require_offset(x);
  std::vector<Complex> spectrum = plan_.forward(f.values);
  const std::vector<double>& lambdas = spectral_grid_->nodes();
  const double mu = grid_->mu();
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    spectrum[i] *= dunkl_kernel(mu, lambdas[i] * x);
  SampledSignal out;
  out.measure = grid_;
  out.values = plan_.inverse(spectrum);
  return out;
}

SampledSignal TranslationEngine::translate(const SL2Matrix& m, double x,
                                           const SampledSignal& f) const {
  const double half = require_chirp_half(m, "translate");
  require_engine_grid(*grid_, f);
  require_offset(x);

  SampledSignal stripped;
  stripped.measure = grid_;
  stripped.values = chirped_values(*grid_, f.values, half, -1.0);

  SampledSignal out = translate_dunkl(x, stripped);
  out.values = chirped_values(*grid_, out.values, half, 1.0);
  const Complex front = unit_phase(half * x * x);
  for (Complex& v : out.values) v *= front;
  return out;
}

SampledSignal translate(const TranslationOperator& op, const SampledSignal& f) {
  if (!f.measure) throw ParameterError("translate: signal has no measure");
  TranslationEngine engine(f.measure);
  return engine.translate(op.matrix, op.x, f);
}

SampledSignal translate_dunkl(double x, const SampledSignal& f) {
  if (!f.measure) throw ParameterError("translate: signal has no measure");
  TranslationEngine engine(f.measure);
  return engine.translate_dunkl(x, f);
}

SampledSignal convolve_dunkl(const SampledSignal& f, const SampledSignal& g) {
  require_common_grid(f, g);
  const WeightedMeasure& grid = *f.measure;
  TranslationEngine engine(f.measure);
  const DunklPlan& plan = engine.plan();
  const KernelTable& table = plan.table();

  // One forward transform is shared by every translate below; each output
  // point then costs one spectral filter, one inverse, and one quadrature.
  // The kernel table holds dunkl_kernel(mu, -lambda_i y_j), whose conjugate
  // is the kernel at +lambda_i y_j, exactly the filter for x = y_j.
  const std::vector<Complex> transformed = plan.forward(f.values);
  const double cmu = dunkl_normalization(grid.mu());
  const std::vector<double>& ww = grid.weighted_weights();

  SampledSignal out;
  out.measure = f.measure;
  out.values.reserve(grid.size());
  std::vector<Complex> filtered(transformed.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    for (std::size_t i = 0; i < transformed.size(); ++i)
      filtered[i] = std::conj(table.value(i, j)) * transformed[i];
    const std::vector<Complex> shifted = plan.inverse(filtered);
    KahanAccumulator re, im;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Complex term =
          shifted[k] * g.values[grid.mirror_index(k)] * ww[k];
      re.add(term.real());
      im.add(term.imag());
    }
    out.values.push_back(cmu * Complex(re.value(), im.value()));
  }
  return out;
}

SampledSignal convolve_lc(const SL2Matrix& m, const SampledSignal& f,
                          const SampledSignal& g) {
  const double half = require_chirp_half(m, "convolve");
  require_common_grid(f, g);
  const WeightedMeasure& grid = *f.measure;

  SampledSignal fs;
  fs.measure = f.measure;
  fs.values = chirped_values(grid, f.values, half, -1.0);
  SampledSignal gs;
  gs.measure = g.measure;
  gs.values = chirped_values(grid, g.values, half, -1.0);

  SampledSignal out = convolve_dunkl(fs, gs);
  out.values = chirped_values(grid, out.values, half, 1.0);
  return out;
}

YoungReport young_check(const SL2Matrix& m, const SampledSignal& f,
                        const SampledSignal& g, double p, double q, double r,
                        double slack) {
  const double ip = holder_reciprocal(p, "p");
  const double iq = holder_reciprocal(q, "q");
  const double ir = holder_reciprocal(r, "r");
  if (std::abs(ip + iq - 1.0 - ir) > 1e-12)
    throw ParameterError("young_check: exponents must satisfy 1/p + 1/q - 1 = 1/r");
  if (!(slack >= 0.0))
    throw ParameterError("young_check: slack must be nonnegative");

  const SampledSignal conv = convolve_lc(m, f, g);
  YoungReport report;
  report.lhs = norm_p(conv, r);
  report.rhs = norm_p(f, p) * norm_p(g, q);
  report.slack = slack;
  report.holds = report.lhs <= report.rhs * (1.0 + slack);
  return report;
}

}  // namespace lcdw
