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

#ifndef MEDOPT_INSTANCE_HPP
#define MEDOPT_INSTANCE_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "medopt/distribution.hpp"
#include "medopt/expression.hpp"

namespace medopt {

/// Buyer valuation v(t, q) = alpha1(q) * t + alpha2(q) together with the
/// seller's reserve value r(q) = k * q. alpha1 must be positive on the
/// seller support and k non-negative; both are checked by
/// validate_instance rather than at construction.
struct ValuationModel {
  Expression alpha1;
  Expression alpha2;
  double k = 0.0;

  double value(double t, double q) const { return alpha1.eval(q) * t + alpha2.eval(q); }
  double reserve(double q) const { return k * q; }
};

struct NumericConfig {
  int quad_nodes = 2001;   // composite Simpson nodes per axis
  int grid_n = 2001;       // tabulation grid for transforms and payment curves
  int iron_grid_n = 4001;  // ironing grid resolution
  double tol = 1e-9;       // monotonicity / classification tolerance
};

struct ProblemInstance {
  Distribution buyer_dist;
  Distribution seller_dist;
  ValuationModel valuation;
  NumericConfig numerics;
};

struct ValidationIssue {
  std::string message;
  double where = std::numeric_limits<double>::quiet_NaN();  // witnessing grid point
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Samples every model assumption on a 1001-point grid per support:
/// alpha1(q) > 0, strictly positive densities, cdf hitting 0/1 at the
/// support edges, non-decreasing cdf, and k >= 0. Returns one issue per
/// violated assumption with a witnessing grid point.
ValidationReport validate_instance(const ProblemInstance& inst);

}  // namespace medopt

#endif  // MEDOPT_INSTANCE_HPP
