// Copyright 2026 The Hypfill Authors.
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

#include "hypfill/nets.hpp"

#include <cmath>

#include "hypfill/errors.hpp"

namespace hypfill {

NetHierarchy build_nested_nets(const FiniteMetricSpace& space, double alpha, int depth) {
  if (!(alpha >= 2.0)) throw Error("build_nested_nets: alpha must be >= 2");
  if (depth < 1) throw Error("build_nested_nets: depth must be >= 1");

  NetHierarchy nets;
  nets.alpha = alpha;
  nets.requested_depth = depth;

  int effective = depth;
  for (int n = 0; n <= depth; ++n) {
    if (std::pow(alpha, -n) < space.resolution() / 2) {
      effective = std::min(effective, n);
      nets.capped = effective < depth;
      break;
    }
  }
  nets.depth = effective;
  nets.resolution_exceeded = std::pow(alpha, -effective) < space.resolution();

  const int n_pts = space.size();
  std::vector<char> member(n_pts, 0);
  std::vector<int> current;
  for (int lev = 0; lev <= effective; ++lev) {
    const double sep = std::pow(alpha, -lev);
    for (int i = 0; i < n_pts; ++i) {
      if (member[i]) continue;
      bool ok = true;
      for (int j : current) {
        if (space.dist(i, j) < sep) {
          ok = false;
          break;
        }
      }
      if (ok) {
        current.push_back(i);
        member[i] = 1;
      }
    }
    nets.levels.push_back(current);
  }
  return nets;
}

}  // namespace hypfill
