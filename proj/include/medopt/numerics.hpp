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

#ifndef MEDOPT_NUMERICS_HPP
#define MEDOPT_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace medopt {

inline std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("linspace needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(n));
  double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + h * i;
  out.back() = b;
  return out;
}

/// Composite Simpson rule with `nodes` sample points on [a, b]. An even
/// node count is bumped to the next odd one; returns 0 for a >= b.
template <class F>
double simpson(F&& f, double a, double b, int nodes) {
  if (!(b > a)) return 0.0;
  if (nodes < 3) nodes = 3;
  if (nodes % 2 == 0) ++nodes;
  const int cells = nodes - 1;
  const double h = (b - a) / cells;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < cells; i += 2) odd += f(a + h * i);
  for (int i = 2; i < cells; i += 2) even += f(a + h * i);
  return (h / 3.0) * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

/// Piecewise-linear function on strictly increasing knots with clamped
/// extrapolation.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.size() < 2) {
      throw std::invalid_argument("piecewise-linear table needs >= 2 matching knots");
    }
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
      if (!(x_[i] < x_[i + 1])) {
        throw std::invalid_argument("piecewise-linear knots must be strictly increasing");
      }
    }
  }

  bool empty() const { return x_.empty(); }
  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  double front() const { return y_.front(); }
  double back() const { return y_.back(); }

  double operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    double w = (x - x_[i]) / (x_[i + 1] - x_[i]);
    return y_[i] + w * (y_[i + 1] - y_[i]);
  }

 private:
  std::vector<double> x_, y_;
};

/// Cumulative integral of f over the given knots, accumulated upward from
/// knots.front() with a three-point Simpson rule per cell. The result is a
/// piecewise-linear table of x -> integral_{knots.front()}^{x} f.
template <class F>
PiecewiseLinear cumulative_integral(F&& f, const std::vector<double>& knots) {
  std::vector<double> acc(knots.size());
  acc[0] = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double a = knots[i], b = knots[i + 1];
    double cell = (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    acc[i + 1] = acc[i] + cell;
  }
  return PiecewiseLinear(knots, std::move(acc));
}

/// As above, but accumulated downward so that the table holds
/// x -> integral_{x}^{knots.back()} f. Small values near the upper end are
/// formed from small sums, keeping them relatively accurate.
template <class F>
PiecewiseLinear cumulative_integral_from_top(F&& f, const std::vector<double>& knots) {
  std::vector<double> acc(knots.size());
  acc.back() = 0.0;
  for (std::size_t i = knots.size() - 1; i-- > 0;) {
    double a = knots[i], b = knots[i + 1];
    double cell = (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    acc[i] = acc[i + 1] + cell;
  }
  return PiecewiseLinear(knots, std::move(acc));
}

/// Supremum of {x in [lo, hi] : pred(x)} for a predicate that is true on a
/// prefix of the interval. Requires pred(lo); returns hi if pred(hi).
template <class P>
double bisect_sup(P&& pred, double lo, double hi, int iters = 100) {
  if (pred(hi)) return hi;
  for (int i = 0; i < iters && hi - lo > 0.0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Infimum of {x in [lo, hi] : pred(x)} for a predicate that is true on a
/// suffix of the interval. Requires pred(hi); returns lo if pred(lo).
template <class P>
double bisect_inf(P&& pred, double lo, double hi, int iters = 100) {
  if (pred(lo)) return lo;
  for (int i = 0; i < iters && hi - lo > 0.0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Sorts, clamps to [lo, hi] and deduplicates (within `eps`) a knot list,
/// guaranteeing lo and hi are present.
std::vector<double> normalize_knots(std::vector<double> knots, double lo, double hi, double eps);

}  // namespace medopt

#endif  // MEDOPT_NUMERICS_HPP
