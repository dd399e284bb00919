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

#include "medopt/instance.hpp"

#include <limits>
#include <sstream>

#include "medopt/numerics.hpp"

namespace medopt {

namespace {

constexpr int kValidationGrid = 1001;

void check_distribution(const Distribution& d, const char* label,
                        std::vector<ValidationIssue>& issues) {
  const Interval& s = d.support();
  if (std::fabs(d.cdf(s.lo)) > 1e-9) {
    issues.push_back({std::string(label) + " cdf does not start at 0", s.lo});
  }
  if (std::fabs(d.cdf(s.hi) - 1.0) > 1e-9) {
    issues.push_back({std::string(label) + " cdf does not reach 1", s.hi});
  }
  auto grid = linspace(s.lo, s.hi, kValidationGrid);
  bool density_flagged = false;
  double prev_cdf = -1.0;
  bool monotone_flagged = false;
  for (double x : grid) {
    if (!density_flagged && !(d.pdf(x) > 0.0)) {
      issues.push_back({std::string(label) + " density is not strictly positive", x});
      density_flagged = true;
    }
    double c = d.cdf(x);
    if (!monotone_flagged && c < prev_cdf - 1e-12) {
      issues.push_back({std::string(label) + " cdf decreases", x});
      monotone_flagged = true;
    }
    prev_cdf = c;
  }
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << issue.message;
    if (std::isfinite(issue.where)) os << " (at " << issue.where << ")";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  check_distribution(inst.buyer_dist, "buyer", report.issues);
  check_distribution(inst.seller_dist, "seller", report.issues);

  if (inst.valuation.k < 0.0 || !std::isfinite(inst.valuation.k)) {
    report.issues.push_back({"k negative", inst.valuation.k});
  }

  const Interval& qs = inst.seller_dist.support();
  auto grid = linspace(qs.lo, qs.hi, kValidationGrid);
  bool a1_flagged = false, eval_flagged = false;
  for (double q : grid) {
    try {
      double a1 = inst.valuation.alpha1.eval(q);
      if (!a1_flagged && !(a1 > 0.0)) {
        report.issues.push_back({"alpha1 is not strictly positive", q});
        a1_flagged = true;
      }
      inst.valuation.alpha2.eval(q);
    } catch (const EvalError& e) {
      if (!eval_flagged) {
        report.issues.push_back({std::string("valuation expression failed: ") + e.what(), q});
        eval_flagged = true;
      }
    }
    if (a1_flagged && eval_flagged) break;
  }

  if (inst.numerics.quad_nodes < 3 || inst.numerics.grid_n < 3 || inst.numerics.iron_grid_n < 3) {
    report.issues.push_back({"numeric configuration requires >= 3 nodes per grid",
                             std::numeric_limits<double>::quiet_NaN()});
  }
  return report;
}

}  // namespace medopt
