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

#include "medopt/numerics.hpp"

namespace medopt {

std::vector<double> normalize_knots(std::vector<double> knots, double lo, double hi, double eps) {
  knots.push_back(lo);
  knots.push_back(hi);
  for (double& k : knots) k = std::min(hi, std::max(lo, k));
  std::sort(knots.begin(), knots.end());
  std::vector<double> out;
  out.reserve(knots.size());
  out.push_back(lo);
  for (double k : knots) {
    if (k - out.back() > eps) out.push_back(k);
  }
  if (hi - out.back() > eps) {
    out.push_back(hi);
  } else {
    out.back() = hi;
  }
  if (out.size() < 2) out = {lo, hi};
  return out;
}

}  // namespace medopt
