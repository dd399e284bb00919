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

#include "medopt/density_grid.hpp"

namespace medopt {

PiecewiseLinear build_quantile_table(const Distribution& dist, int n) {
  auto u = linspace(0.0, 1.0, n);
  std::vector<double> q(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) q[i] = dist.quantile(u[i]);
  return PiecewiseLinear(std::move(u), std::move(q));
}

}  // namespace medopt
