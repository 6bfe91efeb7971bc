// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "lcdw/special_functions.hpp"

namespace lcdw {

// Compensated accumulator.  The discrete Plancherel and orthogonality
// identities are pinned near machine precision, so the big reductions in
// this library avoid plain left-to-right summation.
class KahanAccumulator {
 public:
  void add(double x) {
    double y = x - carry_;
    double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Gauss-Legendre rule on [-1, 1].  Nodes ascend and are exactly symmetric:
// node[k] == -node[n-1-k] bit for bit, so rules composed from this stay
// mirror symmetric without rounding slack.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int order);

// Composite Gauss-Legendre grid over [-radius, radius]: `panels` equal
// panels with `order` nodes each.  Negative nodes are exact negations of
// the positive ones, which downstream code relies on when it pairs a node
// with its mirror image.
struct SymmetricGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double radius = 0.0;
  int panels = 0;
  int order = 0;
};
SymmetricGrid build_grid(double radius, int panels, int order);

// Quadrature nodes against the reflection-invariant measure
// |y|^(2 mu + 1) dy on [-radius, radius].  weighted_weights() carries the
// measure density so integrals are plain dot products against it.
class WeightedMeasure {
 public:
  WeightedMeasure(double mu, SymmetricGrid grid);

  double mu() const { return mu_; }
  double radius() const { return grid_.radius; }
  int panels() const { return grid_.panels; }
  int order() const { return grid_.order; }
  // Largest gap between consecutive nodes, used by sampling adequacy checks.
  double max_spacing() const;
  std::size_t size() const { return grid_.nodes.size(); }
  const std::vector<double>& nodes() const { return grid_.nodes; }
  const std::vector<double>& plain_weights() const { return grid_.weights; }
  const std::vector<double>& weighted_weights() const { return weighted_; }
  // Index of -nodes()[i]; exact because the grid is exactly symmetric.
  std::size_t mirror_index(std::size_t i) const { return size() - 1 - i; }

 private:
  double mu_;
  SymmetricGrid grid_;
  std::vector<double> weighted_;
};

// sum_i values[i] * weighted_weights[i], compensated.
Complex integrate(const WeightedMeasure& measure,
                  const std::vector<Complex>& values);

// Geometric grid on [t_min, t_max] with trapezoid weights in log scale,
// approximating integrals against dt/t.  The weights sum to
// log(t_max / t_min) by construction.
struct LogScaleGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LogScaleGrid build_log_grid(double t_min, double t_max, int count);

}  // namespace lcdw
