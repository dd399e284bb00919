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

#ifndef MEDOPT_IRONING_HPP
#define MEDOPT_IRONING_HPP

#include <vector>

#include "medopt/instance.hpp"
#include "medopt/virtual_functions.hpp"

namespace medopt {

struct EnvelopeResult {
  std::vector<double> lower;   // envelope values at the sample points
  std::vector<double> slopes;  // per-cell slope of the envelope (size n-1)
};

/// Greatest convex minorant of the sampled points (w, H), computed by a
/// single monotone-chain pass over the lower hull. `w` must be strictly
/// increasing with at least two points.
EnvelopeResult lower_convex_envelope(const std::vector<double>& w, const std::vector<double>& H);

enum class Side { kBuyer, kSeller };

struct IronedInterval {
  double w_lo, w_hi;  // in the reparameterised coordinate
  double x_lo, x_hi;  // in type space (t for the buyer, q for the seller)
};

/// Monotone rectification of a (possibly non-monotone) transform.
///
/// The transform is reparameterised as h(w) (w = F(t) for the buyer,
/// w(q) = cumulative alpha1-weighted seller mass for the seller), H is the
/// running integral of h, L the lower convex envelope of H, and l the
/// per-cell slope of L. The ironed transform is l read back through the
/// reparameterisation; it is non-decreasing and constant across each
/// ironed interval. Evaluation between cells is piecewise-constant with
/// the left-continuous convention.
struct IronedFunction {
  Side side = Side::kBuyer;
  std::vector<double> w_grid;  // increasing, spans [0, w_max]
  std::vector<double> x_grid;  // matching positions in type space
  std::vector<double> h, H, L; // sampled transform, its integral, envelope
  std::vector<double> l;       // envelope slope per cell (size n-1)
  std::vector<IronedInterval> ironed_intervals;
  double w_max = 1.0;

  /// Ironed transform at a type-space point (psi-bar / varphi-bar).
  double eval(double x) const;
};

IronedFunction iron_buyer(const ProblemInstance& inst);
IronedFunction iron_seller(const ProblemInstance& inst);

inline double eval_ironed(const IronedFunction& fn, double x) { return fn.eval(x); }

}  // namespace medopt

#endif  // MEDOPT_IRONING_HPP
