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

#ifndef MEDOPT_VIRTUAL_FUNCTIONS_HPP
#define MEDOPT_VIRTUAL_FUNCTIONS_HPP

#include <vector>

#include "medopt/instance.hpp"

namespace medopt {

/// Marginal-revenue transform t - (1 - F(t)) / f(t). Throws
/// std::domain_error outside the support.
double virtual_value(const Distribution& dist, double t);

/// Marginal-cost transform q + F(q) / f(q).
double virtual_cost(const Distribution& dist, double q);

/// Buyer-side transform psi(t) = virtual_value(t) under the buyer
/// distribution.
double psi_at(const ProblemInstance& inst, double t);

/// Seller-side transform varphi(q) = (k * virtual_cost(q) - alpha2(q)) /
/// alpha1(q); the quantity the buyer transform is compared against in a
/// threshold rule.
double varphi_at(const ProblemInstance& inst, double q);

/// psi and varphi tabulated on uniform grids of numerics.grid_n points.
struct VirtualProfile {
  std::vector<double> t_grid, psi;
  std::vector<double> q_grid, varphi;
};

VirtualProfile compute_profile(const ProblemInstance& inst);

struct MonotonicityViolation {
  double lo, hi;   // grid interval where the tabulated function decreases
  double drop;     // largest decrease observed inside the interval
};

struct RegularityReport {
  bool buyer_regular = true;
  bool seller_regular = true;
  std::vector<MonotonicityViolation> buyer_violations, seller_violations;
  bool regular() const { return buyer_regular && seller_regular; }
};

/// Flags every maximal grid interval on which the tabulated transform
/// strictly decreases by more than `tol`. Flat stretches count as
/// non-decreasing.
RegularityReport regularity_check(const VirtualProfile& profile, double tol = 1e-9);

}  // namespace medopt

#endif  // MEDOPT_VIRTUAL_FUNCTIONS_HPP
