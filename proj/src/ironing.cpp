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

#include "medopt/ironing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "medopt/density_grid.hpp"
#include "medopt/numerics.hpp"

namespace medopt {

EnvelopeResult lower_convex_envelope(const std::vector<double>& w, const std::vector<double>& H) {
  const std::size_t n = w.size();
  if (n < 2 || H.size() != n) {
    throw std::invalid_argument("envelope needs >= 2 matching (w, H) points");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(w[i] < w[i + 1])) {
      throw std::invalid_argument("envelope abscissae must be strictly increasing");
    }
  }

  // Lower hull by monotone chain; points arrive sorted by w.
  std::vector<std::size_t> hull;
  hull.reserve(n);
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (w[a] - w[o]) * (H[b] - H[o]) - (H[a] - H[o]) * (w[b] - w[o]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }

  EnvelopeResult result;
  result.lower.resize(n);
  result.slopes.resize(n - 1);
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    std::size_t a = hull[seg], b = hull[seg + 1];
    double slope = (H[b] - H[a]) / (w[b] - w[a]);
    for (std::size_t i = a; i < b; ++i) {
      result.lower[i] = H[a] + slope * (w[i] - w[a]);
      result.slopes[i] = slope;
    }
  }
  result.lower.back() = H.back();
  return result;
}

double IronedFunction::eval(double x) const {
  if (x < x_grid.front() || x > x_grid.back()) {
    throw std::domain_error("ironed function evaluated outside the support");
  }
  // Left-continuous step lookup: the value on (x_i, x_{i+1}] is l[i]; the
  // first cell also covers its left edge.
  auto it = std::lower_bound(x_grid.begin(), x_grid.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_grid.begin());
  if (i > 0) --i;
  if (i >= l.size()) i = l.size() - 1;
  return l[i];
}

namespace {

IronedFunction build(Side side, std::vector<double> w, std::vector<double> x,
                     std::vector<double> h, double iron_tol) {
  IronedFunction fn;
  fn.side = side;
  fn.w_grid = std::move(w);
  fn.x_grid = std::move(x);
  fn.h = std::move(h);
  fn.w_max = fn.w_grid.back();

  const std::size_t n = fn.w_grid.size();
  fn.H.resize(n);
  fn.H[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    fn.H[i + 1] = fn.H[i] + 0.5 * (fn.h[i] + fn.h[i + 1]) * (fn.w_grid[i + 1] - fn.w_grid[i]);
  }

  EnvelopeResult env = lower_convex_envelope(fn.w_grid, fn.H);
  fn.L = std::move(env.lower);
  fn.l = std::move(env.slopes);

  // Maximal runs of grid points with a genuine gap between H and its hull.
  bool open = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool gapped = fn.H[i] - fn.L[i] > iron_tol * std::max(1.0, std::fabs(fn.H[i]));
    if (gapped && !open) {
      std::size_t lo = i > 0 ? i - 1 : 0;
      fn.ironed_intervals.push_back(
          {fn.w_grid[lo], fn.w_grid[i], fn.x_grid[lo], fn.x_grid[i]});
      open = true;
    } else if (gapped) {
      fn.ironed_intervals.back().w_hi = fn.w_grid[i];
      fn.ironed_intervals.back().x_hi = fn.x_grid[i];
    } else if (open) {
      fn.ironed_intervals.back().w_hi = fn.w_grid[i];
      fn.ironed_intervals.back().x_hi = fn.x_grid[i];
      open = false;
    }
  }
  return fn;
}

}  // namespace

IronedFunction iron_buyer(const ProblemInstance& inst) {
  const int n = inst.numerics.iron_grid_n;
  const Distribution& dist = inst.buyer_dist;
  std::vector<double> w = linspace(0.0, 1.0, n);
  std::vector<double> x(w.size()), h(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    x[i] = dist.quantile(w[i]);
    h[i] = virtual_value(dist, x[i]);
  }
  return build(Side::kBuyer, std::move(w), std::move(x), std::move(h), 1e-9);
}

IronedFunction iron_seller(const ProblemInstance& inst) {
  const int n = inst.numerics.iron_grid_n;
  const Interval& s = inst.seller_dist.support();
  std::vector<double> q = linspace(s.lo, s.hi, n);
  // w(q) is the alpha1-weighted seller mass below q, accumulated in
  // probability space so integrable density singularities stay benign.
  PiecewiseLinear quant = build_quantile_table(inst.seller_dist, n);
  PiecewiseLinear calpha = cumulative_against_density(
      quant, [&](double v) { return inst.valuation.alpha1.eval(v); }, n);
  std::vector<double> w(q.size()), h(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    w[i] = calpha(inst.seller_dist.cdf(q[i]));
    h[i] = varphi_at(inst, q[i]);
  }
  w.front() = 0.0;
  return build(Side::kSeller, std::move(w), std::move(q), std::move(h), 1e-9);
}

}  // namespace medopt
