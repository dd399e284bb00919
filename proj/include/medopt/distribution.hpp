// Copyright 2026 The medopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEDOPT_DISTRIBUTION_HPP
#define MEDOPT_DISTRIBUTION_HPP

#include <string>
#include <vector>

namespace medopt {

/// Closed interval [lo, hi] with lo strictly below hi.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_);

  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

enum class DistFamily { kUniform, kTruncatedNormal, kBetaRescaled, kTabulatedPdf };

/// Continuous type distribution with strictly positive density on a compact
/// support. Four families are supported: uniform, normal truncated to the
/// support, a beta distribution rescaled onto the support, and a tabulated
/// piecewise-linear density (renormalised to integrate to one at load).
///
/// The quantile is always computed by bisection on the cdf, regardless of
/// family. Instances are immutable after construction.
class Distribution {
 public:
  static Distribution uniform(Interval support);
  static Distribution truncated_normal(double mu, double sigma, Interval support);
  static Distribution beta_rescaled(double a, double b, Interval support);
  /// `xs` must be strictly increasing; xs.front()/xs.back() define the
  /// support. Densities must be strictly positive and are rescaled so the
  /// piecewise-linear density integrates to one.
  static Distribution tabulated_pdf(std::vector<double> xs, std::vector<double> densities);

  /// Density at x. Throws std::domain_error outside the support.
  double pdf(double x) const;

  /// Cumulative probability; arguments outside the support are clamped.
  double cdf(double x) const;

  /// Inverse cdf by bisection. Throws std::invalid_argument for p outside
  /// [0, 1].
  double quantile(double p) const;

  const Interval& support() const { return support_; }
  DistFamily family() const { return family_; }

  /// Factor the supplied tabulated densities were multiplied by so that the
  /// density integrates to one (1 for the analytic families).
  double renormalization() const { return renormalization_; }

  std::string describe() const;

 private:
  Distribution(DistFamily family, Interval support);

  DistFamily family_;
  Interval support_;
  double renormalization_ = 1.0;

  // truncated normal
  double mu_ = 0.0, sigma_ = 1.0;
  double phi_lo_ = 0.0, z_ = 1.0;  // cdf of lower edge, total truncated mass

  // beta
  double a_ = 1.0, b_ = 1.0, log_beta_ = 0.0;

  // tabulated
  std::vector<double> xs_, ds_, cum_;
};

}  // namespace medopt

#endif  // MEDOPT_DISTRIBUTION_HPP
