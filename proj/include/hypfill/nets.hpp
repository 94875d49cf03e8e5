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

#pragma once

#include <vector>

#include "hypfill/metric_space.hpp"

namespace hypfill {

// Nested maximal alpha^{-n}-separated subsets A_0 c A_1 c ... c A_N.
// levels[n] lists point ids in admission order: the members of A_{n-1} first
// (in their order), then newly admitted points by ascending id. Invariants:
//   separation  d(z,w) >= alpha^{-n} for distinct z,w in A_n
//   covering    every point lies within < alpha^{-n} of some member
//   nesting     A_n subset of A_{n+1}
//   |A_0| = 1   (forced by diam < 1)
struct NetHierarchy {
  double alpha = 2;
  int depth = 0;           // effective depth after capping
  int requested_depth = 0;
  bool capped = false;     // true when alpha^{-n} fell below resolution/2
  bool resolution_exceeded = false;  // alpha^{-depth} < space resolution
  std::vector<std::vector<int>> levels;
};

// Greedy nested construction: A_{n+1} starts from A_n, remaining points are
// scanned in ascending id order and admitted iff at distance >= alpha^{-(n+1)}
// from all current members. Depth is capped at the first level whose scale
// drops below half the space resolution; deeper levels would repeat the full
// point set.
NetHierarchy build_nested_nets(const FiniteMetricSpace& space, double alpha, int depth);

}  // namespace hypfill
