// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "lcdw/quadrature.hpp"

namespace lcdw {

// A function sampled on the nodes of a weighted measure.  The measure is
// shared because every signal in a computation lives on the same grid and
// the transforms validate that by pointer identity where it matters.
struct SampledSignal {
  std::shared_ptr<const WeightedMeasure> measure;
  std::vector<Complex> values;
};

template <typename Fn>
SampledSignal make_signal(std::shared_ptr<const WeightedMeasure> measure,
                          Fn&& fn) {
  SampledSignal s;
  s.values.reserve(measure->size());
  for (double y : measure->nodes()) s.values.push_back(Complex(fn(y)));
  s.measure = std::move(measure);
  return s;
}

// L^p norm against the weighted measure; p may be any value in [1, inf].
// p = infinity returns the max modulus over the nodes.
double norm_p(const SampledSignal& f, double p);

// Integral of f times conj(g) against the weighted measure.
Complex inner_product(const SampledSignal& f, const SampledSignal& g);

// What interpolation does when asked for a point outside the node range.
// Resampling after a dilation legitimately runs off the end and pads with
// zero; coordinate changes inside a transform must not.  kExtrapolate
// skips the range check and lets the clamped stencil extrapolate, for
// callers that bound the overhang themselves (quadrature nodes stop short
// of the nominal grid radius, so a mapped point can land in that sliver).
enum class OutsidePolicy { kZero, kThrow, kExtrapolate };

// Local Lagrange interpolation through `points` consecutive samples around
// x.  xs must be strictly ascending.  points = 4 is a cubic; dilation uses
// 6 because its error budget is tighter than cubic can deliver on the
// default grids.
Complex interpolate(const std::vector<double>& xs,
                    const std::vector<Complex>& ys, double x, int points,
                    OutsidePolicy policy);

}  // namespace lcdw
