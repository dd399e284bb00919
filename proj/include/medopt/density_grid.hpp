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

#ifndef MEDOPT_DENSITY_GRID_HPP
#define MEDOPT_DENSITY_GRID_HPP

#include "medopt/distribution.hpp"
#include "medopt/numerics.hpp"

namespace medopt {

// Integrals against a density are computed in probability space:
// integral of X(x) f(x) dx over {cdf <= u} equals the integral of
// X(quantile(v)) dv over [0, u]. This keeps quadrature well behaved for
// densities with integrable endpoint singularities (rescaled betas with
// shape parameters below one).

/// Tabulated quantile function on a uniform probability grid of n points.
PiecewiseLinear build_quantile_table(const Distribution& dist, int n);

/// Cumulative u -> integral_0^u g(quantile(v)) dv on a uniform probability
/// grid, i.e. the g-weighted probability mass of {x : cdf(x) <= u}.
template <class G>
PiecewiseLinear cumulative_against_density(const PiecewiseLinear& quantile_table, G&& g, int n) {
  auto integrand = [&](double u) { return g(quantile_table(u)); };
  return cumulative_integral(integrand, linspace(0.0, 1.0, n));
}

}  // namespace medopt

#endif  // MEDOPT_DENSITY_GRID_HPP
