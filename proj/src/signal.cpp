// SPDX-License-Identifier: Apache-2.0
#include "lcdw/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lcdw/errors.hpp"

namespace lcdw {

double norm_p(const SampledSignal& f, double p) {
  if (!(p >= 1.0))
    throw ParameterError("norm_p: exponent must satisfy p >= 1, got " +
                         std::to_string(p));
  if (std::isinf(p)) {
    double best = 0.0;
    for (const Complex& v : f.values) best = std::max(best, std::abs(v));
    return best;
  }
  KahanAccumulator acc;
  const std::vector<double>& ww = f.measure->weighted_weights();
  for (std::size_t i = 0; i < f.values.size(); ++i)
    acc.add(std::pow(std::abs(f.values[i]), p) * ww[i]);
  return std::pow(acc.value(), 1.0 / p);
}

Complex inner_product(const SampledSignal& f, const SampledSignal& g) {
  if (f.measure->size() != g.measure->size())
    throw ParameterError("inner_product: signals live on different grids");
  KahanAccumulator re;
  KahanAccumulator im;
  const std::vector<double>& ww = f.measure->weighted_weights();
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Complex t = f.values[i] * std::conj(g.values[i]);
    re.add(t.real() * ww[i]);
    im.add(t.imag() * ww[i]);
  }
  return {re.value(), im.value()};
}

Complex interpolate(const std::vector<double>& xs,
                    const std::vector<Complex>& ys, double x, int points,
                    OutsidePolicy policy) {
  if (points < 2 || static_cast<std::size_t>(points) > xs.size())
    throw ParameterError("interpolate: invalid stencil width");
  if ((x < xs.front() || x > xs.back()) &&
      policy != OutsidePolicy::kExtrapolate) {
    if (policy == OutsidePolicy::kZero) return {0.0, 0.0};
    throw RangeError("interpolate: point " + std::to_string(x) +
                     " lies outside the sampled support");
  }
  // Center the stencil on the gap containing x, clamped to the ends.
  std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  std::ptrdiff_t first =
      static_cast<std::ptrdiff_t>(hi) - points / 2;
  first = std::clamp<std::ptrdiff_t>(
      first, 0, static_cast<std::ptrdiff_t>(xs.size()) - points);

  Complex acc(0.0, 0.0);
  for (int i = 0; i < points; ++i) {
    double basis = 1.0;
    double xi = xs[first + i];
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      basis *= (x - xs[first + j]) / (xi - xs[first + j]);
    }
    acc += basis * ys[first + i];
  }
  return acc;
}

}  // namespace lcdw
