// SPDX-License-Identifier: Apache-2.0
#include "lcdw/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lcdw/errors.hpp"
#include "lcdw/quadrature.hpp"

namespace lcdw {

namespace {

// Weight of each (scale, position) cell under the product measure, one
// entry per field value in the same row-major order.  Must stay in step
// with field_energy.
std::vector<double> cell_weights(const CoefficientField& field) {
  if (!field.positions)
    throw ParameterError("cell_weights: field carries no position measure");
  if (field.values.size() != field.scales() * field.width())
    throw ParameterError("cell_weights: field storage is inconsistent");
  const std::vector<double>& ww = field.positions->weighted_weights();
  std::vector<double> out(field.values.size());
  for (std::size_t s = 0; s < field.scales(); ++s) {
    const double t = field.scale_grid.nodes[s];
    const double nu =
        field.scale_grid.weights[s] * std::pow(t, -(2.0 * field.mu + 2.0));
    for (std::size_t j = 0; j < field.width(); ++j)
      out[s * field.width() + j] = nu * ww[j];
  }
  return out;
}

void require_region(const CoefficientField& field,
                    const ConcentrationRegion& region, const char* who) {
  if (region.indicator.size() != field.values.size())
    throw ParameterError(std::string(who) +
                         ": region indicator does not cover the field");
  if (!std::isfinite(region.measure) || region.measure < 0.0)
    throw ParameterError(std::string(who) +
                         ": region measure must be finite and nonnegative");
}

void require_exponent(double p, double floor, const char* who) {
  if (!std::isfinite(p) || p < floor)
    throw ParameterError(std::string(who) + ": exponent must be finite and "
                         "at least " + std::to_string(floor));
}

double region_energy(const CoefficientField& field,
                     const ConcentrationRegion& region) {
  const std::vector<double> w = cell_weights(field);
  KahanAccumulator acc;
  for (std::size_t c = 0; c < w.size(); ++c)
    if (region.indicator[c]) acc.add(w[c] * std::norm(field.values[c]));
  return acc.value();
}

InequalityReport verdict(std::string name, std::string detail, double lhs,
                         double rhs, double slack) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.detail = std::move(detail);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = slack;
  rep.pass = lhs <= rhs * slack;
  return rep;
}

std::string describe(std::initializer_list<std::pair<const char*, double>>
                         params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& kv : params) {
    if (!first) os << ' ';
    os << kv.first << '=' << kv.second;
    first = false;
  }
  return os.str();
}

// p-norm of a coefficient row over the position grid.
double row_norm(const WaveletTransformer& wt, const std::vector<Complex>& row,
                double p) {
  SampledSignal wrapped;
  wrapped.measure = wt.positions();
  wrapped.values = row;
  return norm_p(wrapped, p);
}

void require_same_setup(const WaveletTransformer& a,
                        const WaveletTransformer& b, const char* who) {
  const SL2Matrix& ma = a.matrix();
  const SL2Matrix& mb = b.matrix();
  const bool matrices_match =
      ma.a == mb.a && ma.b == mb.b && ma.c == mb.c && ma.d == mb.d;
  const bool scales_match = a.scale_grid().nodes == b.scale_grid().nodes;
  if (!matrices_match || a.mu() != b.mu() ||
      a.positions()->size() != b.positions()->size() || !scales_match)
    throw ParameterError(std::string(who) +
                         ": the two analyzers must share matrix, order, "
                         "position grid and scale grid");
}

void require_admissible(const WaveletTransformer& wt, const char* who) {
  if (!wt.admissible())
    throw ParameterError(std::string(who) +
                         ": needs an admissible wavelet, the inversion "
                         "constant is undefined otherwise");
}

}  // namespace

ConcentrationRegion full_region(const CoefficientField& field) {
  const std::vector<double> w = cell_weights(field);
  ConcentrationRegion region;
  region.indicator.assign(w.size(), 1);
  KahanAccumulator acc;
  for (double v : w) acc.add(v);
  region.measure = acc.value();
  return region;
}

ConcentrationRegion top_energy_region(const CoefficientField& field,
                                      double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw ParameterError("top_energy_region: fraction must lie in (0, 1]");
  const std::vector<double> w = cell_weights(field);
  std::vector<double> energy(w.size());
  double total = 0.0;
  for (std::size_t c = 0; c < w.size(); ++c) {
    energy[c] = w[c] * std::norm(field.values[c]);
    total += energy[c];
  }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return energy[l] > energy[r];
  });

  ConcentrationRegion region;
  region.indicator.assign(w.size(), 0);
  const double target = fraction * total;
  double captured = 0.0;
  KahanAccumulator measure;
  for (std::size_t c : order) {
    if (captured >= target) break;
    region.indicator[c] = 1;
    captured += energy[c];
    measure.add(w[c]);
  }
  region.measure = measure.value();
  return region;
}

InequalityReport coeff_lp_bound_check(const WaveletTransformer& wt,
                                      const SampledSignal& f, double t,
                                      double p, double slack) {
  require_exponent(p, 1.0, "coeff_lp_bound_check");
  const std::vector<Complex> row = wt.coefficient_row(f, t);
  const double mu = wt.mu();
  const double lhs = row_norm(wt, row, p);
  const double rhs = std::pow(t, (mu + 1.0) * (2.0 / p - 1.0)) *
                     norm_p(wt.wavelet(), p) * norm_p(f, 1.0);
  return verdict("coeff-lp-bound", describe({{"t", t}, {"p", p}}), lhs, rhs,
                 slack);
}

InequalityReport coeff_sup_bound_check(const WaveletTransformer& wt,
                                       const SampledSignal& f, double t,
                                       double p, double q, double slack) {
  require_exponent(p, 1.0, "coeff_sup_bound_check");
  require_exponent(q, 1.0, "coeff_sup_bound_check");
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
    throw ParameterError("coeff_sup_bound_check: exponents are not "
                         "conjugate, need 1/p + 1/q = 1");
  const std::vector<Complex> row = wt.coefficient_row(f, t);
  double lhs = 0.0;
  for (const Complex& v : row) lhs = std::max(lhs, std::abs(v));
  const double mu = wt.mu();
  const double rhs = std::pow(t, (mu + 1.0) * (2.0 / q - 1.0)) *
                     norm_p(wt.wavelet(), q) * norm_p(f, p);
  return verdict("coeff-sup-bound", describe({{"t", t}, {"p", p}, {"q", q}}),
                 lhs, rhs, slack);
}

InequalityReport concentration_check_1(const CoefficientField& field,
                                       const ConcentrationRegion& region,
                                       double slack) {
  require_region(field, region, "concentration_check_1");
  const double captured = region_energy(field, region);
  return verdict("concentration-support", describe({{"captured", captured}}),
                 captured, region.measure, slack);
}

InequalityReport lieb_check(const WaveletTransformer& wt_psi,
                            const WaveletTransformer& wt_phi,
                            const SampledSignal& f, const SampledSignal& g,
                            double p, double slack) {
  require_exponent(p, 1.0, "lieb_check");
  require_same_setup(wt_psi, wt_phi, "lieb_check");
  require_admissible(wt_psi, "lieb_check");
  require_admissible(wt_phi, "lieb_check");
  const CoefficientField a = wt_psi.analyze(f);
  const CoefficientField b = wt_phi.analyze(g);
  const std::vector<double> w = cell_weights(a);
  KahanAccumulator acc;
  for (std::size_t c = 0; c < w.size(); ++c)
    acc.add(w[c] * std::pow(std::abs(a.values[c] * b.values[c]), p));
  const double lhs = std::pow(acc.value(), 1.0 / p);
  const double rhs =
      std::pow(wt_psi.admissibility() * wt_phi.admissibility(),
               1.0 / (2.0 * p)) *
      std::pow(std::sqrt(wt_psi.wavelet_norm2() * wt_phi.wavelet_norm2()),
               (p - 1.0) / p) *
      norm_p(f, 2.0) * norm_p(g, 2.0);
  return verdict("product-field-bound", describe({{"p", p}}), lhs, rhs,
                 slack);
}

InequalityReport lp_field_bound_check(const WaveletTransformer& wt,
                                      const SampledSignal& f, double p,
                                      double slack) {
  require_exponent(p, 2.0, "lp_field_bound_check");
  require_admissible(wt, "lp_field_bound_check");
  const CoefficientField field = wt.analyze(f);
  const std::vector<double> w = cell_weights(field);
  KahanAccumulator acc;
  for (std::size_t c = 0; c < w.size(); ++c)
    acc.add(w[c] * std::pow(std::abs(field.values[c]), p));
  const double lhs = std::pow(acc.value(), 1.0 / p);
  const double rhs = std::pow(wt.admissibility(), 1.0 / p) *
                     std::pow(std::sqrt(wt.wavelet_norm2()), (p - 2.0) / p) *
                     norm_p(f, 2.0);
  return verdict("field-lp-bound", describe({{"p", p}}), lhs, rhs, slack);
}

InequalityReport concentration_check_2(const CoefficientField& field,
                                       const ConcentrationRegion& region,
                                       double p, double slack) {
  require_region(field, region, "concentration_check_2");
  if (!std::isfinite(p) || p <= 2.0)
    throw ParameterError("concentration_check_2: exponent must be finite "
                         "and greater than 2");
  if (!field.admissible || !std::isfinite(field.admissibility))
    throw ParameterError("concentration_check_2: the field's wavelet is not "
                         "admissible");
  const double captured = region_energy(field, region);
  const double lhs = std::pow(captured, p / (p - 2.0)) *
                     std::pow(field.admissibility, 2.0 / (2.0 - p));
  return verdict("concentration-support-sharp",
                 describe({{"p", p}, {"captured", captured}}), lhs,
                 region.measure, slack);
}

}  // namespace lcdw
