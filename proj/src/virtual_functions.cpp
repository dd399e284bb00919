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

#include "medopt/virtual_functions.hpp"

#include <stdexcept>

#include "medopt/numerics.hpp"

namespace medopt {

double virtual_value(const Distribution& dist, double t) {
  double f = dist.pdf(t);  // throws outside the support
  double tail = 1.0 - dist.cdf(t);
  if (tail == 0.0) return t;  // the hazard correction vanishes at the top
  return t - tail / f;
}

double virtual_cost(const Distribution& dist, double q) {
  double f = dist.pdf(q);
  double mass = dist.cdf(q);
  if (mass == 0.0) return q;
  return q + mass / f;
}

double psi_at(const ProblemInstance& inst, double t) {
  return virtual_value(inst.buyer_dist, t);
}

double varphi_at(const ProblemInstance& inst, double q) {
  double a1 = inst.valuation.alpha1.eval(q);
  double a2 = inst.valuation.alpha2.eval(q);
  return (inst.valuation.k * virtual_cost(inst.seller_dist, q) - a2) / a1;
}

VirtualProfile compute_profile(const ProblemInstance& inst) {
  VirtualProfile profile;
  const int n = inst.numerics.grid_n;
  profile.t_grid = linspace(inst.buyer_dist.support().lo, inst.buyer_dist.support().hi, n);
  profile.q_grid = linspace(inst.seller_dist.support().lo, inst.seller_dist.support().hi, n);
  profile.psi.reserve(profile.t_grid.size());
  profile.varphi.reserve(profile.q_grid.size());
  for (double t : profile.t_grid) profile.psi.push_back(psi_at(inst, t));
  for (double q : profile.q_grid) profile.varphi.push_back(varphi_at(inst, q));
  return profile;
}

namespace {

std::vector<MonotonicityViolation> scan_decreases(const std::vector<double>& x,
                                                  const std::vector<double>& y, double tol) {
  std::vector<MonotonicityViolation> out;
  bool open = false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double drop = y[i] - y[i + 1];
    if (drop > tol) {
      if (!open) {
        out.push_back({x[i], x[i + 1], drop});
        open = true;
      } else {
        out.back().hi = x[i + 1];
        out.back().drop = std::max(out.back().drop, drop);
      }
    } else {
      open = false;
    }
  }
  return out;
}

}  // namespace

RegularityReport regularity_check(const VirtualProfile& profile, double tol) {
  RegularityReport report;
  report.buyer_violations = scan_decreases(profile.t_grid, profile.psi, tol);
  report.seller_violations = scan_decreases(profile.q_grid, profile.varphi, tol);
  report.buyer_regular = report.buyer_violations.empty();
  report.seller_regular = report.seller_violations.empty();
  return report;
}

}  // namespace medopt
