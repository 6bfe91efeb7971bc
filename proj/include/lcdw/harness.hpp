// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lcdw/lcdt.hpp"
#include "lcdw/signal.hpp"
#include "lcdw/uncertainty.hpp"
#include "lcdw/wavelet.hpp"

namespace lcdw {

// Randomized verification suites.  Every suite is a pure function of its
// configuration: the same config and seed produce the same records in the
// same order, which is what makes verify reports byte-identical.

// Deterministic draws.  The engine sequence is fixed by the standard; the
// mappings to doubles are hand rolled here because the distribution
// classes are not portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // [0, 1), 53 uniform bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// The matrices and deformation orders the randomized suites cycle through.
const std::vector<SL2Matrix>& matrix_pool();
const std::vector<double>& order_pool();

// Named analyzing shapes: "hermite" is y exp(-y^2/2) and "ricker" is
// (2(mu+1) - y^2) exp(-y^2/2); both admissible at every order.  Unknown
// names raise ParameterError.
SampledSignal preset_wavelet(const std::string& name,
                             std::shared_ptr<const WeightedMeasure> grid);
const std::vector<std::string>& wavelet_preset_names();

// A random mixture of two to four Gaussian bumps with complex amplitudes.
// Parameters are drawn first and rendered afterwards, so the same rng
// stream yields the same mixture on any grid.
struct MixtureSpec {
  struct Bump {
    Complex amplitude;
    double center = 0.0;
    double width = 1.0;
  };
  std::vector<Bump> bumps;
};
MixtureSpec draw_mixture(Rng& rng);
SampledSignal render_mixture(const MixtureSpec& spec,
                             std::shared_ptr<const WeightedMeasure> grid);

// Removes the part of the signal a finite scale window cannot represent:
// the components whose chirped mean or chirped first moment survive, which
// no scale range recovers.  Subtracting a matched two-term Gaussian keeps
// mixtures inside the Gaussian class.
SampledSignal project_representable(const SL2Matrix& m,
                                    const SampledSignal& f);

// Grids, pool sizes, and tolerances for one verification run.  Defaults
// reproduce the library's default geometry.
struct HarnessConfig {
  double half_width = 12.0;
  int panels = 24;
  int order = 16;
  double t_min = 1.0 / 128.0;
  double t_max = 8.0;
  int scale_count = 80;
  std::uint64_t seed = 7;
  int pool_cases = 20;   // signals for the transform-level suites
  int field_cases = 10;  // cases for the field-level suites
  int draws = 100;       // randomized inequality draws
  double slack = 1.001;  // multiplicative slack for inequality verdicts
  // Exponent triples (p, q, r) the young suite checks; every triple must
  // satisfy 1/p + 1/q = 1 + 1/r or the suite refuses to run.
  std::vector<std::array<double, 3>> young_triples = {
      {1.0, 1.0, 1.0}, {2.0, 1.0, 2.0}, {1.0, 2.0, 2.0}};
};

// One refinement step: twice the panels and twice the scale count, with
// the log step kept so the extra scale nodes extend the range instead of
// packing the old one.
HarnessConfig refine(const HarnessConfig& cfg);

std::shared_ptr<const WeightedMeasure> harness_measure(
    const HarnessConfig& cfg, double mu);
LogScaleGrid harness_scales(const HarnessConfig& cfg);

// Suites.  Names of the records inside each are stable; the CLI prints
// them one line per record.
std::vector<InequalityReport> verify_plancherel(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_inversion(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_translation(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_young(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_orthogonality(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_reproducing(const HarnessConfig& cfg);
std::vector<InequalityReport> verify_uncertainty(const HarnessConfig& cfg);

const std::vector<std::string>& suite_names();

// Runs one suite by name, or every suite in the order of suite_names()
// for "all".  Unknown names raise ParameterError.
std::vector<InequalityReport> run_suite(const std::string& name,
                                        const HarnessConfig& cfg);

}  // namespace lcdw
