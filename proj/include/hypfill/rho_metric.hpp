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

#include <span>
#include <vector>

#include "hypfill/weights.hpp"

namespace hypfill {

struct RhoDistanceResult {
  double value = 0;         // sum of edge integrals along `path`
  std::vector<int> path;    // vertex ids, empty for u == v
  double tail_bound = 0;    // additive uncertainty vs. the untruncated space
};

// Exact shortest path under per-edge cost (pi(u)+pi(v))/2 (label-setting;
// costs are positive so vertex-to-vertex paths suffice for the infimum).
RhoDistanceResult drho(const FillingGraph& g, const WeightAssignment& w, int u, int v);

// All shortest-path values from src; when parent != nullptr it receives the
// predecessor of each vertex (-1 for src / unreached).
std::vector<double> dijkstra_from(const FillingGraph& g, const WeightAssignment& w, int src,
                                  std::vector<int>* parent = nullptr);

// Nearest level-rep_level net point, ties by smaller point id. The covering
// invariant puts it within d_Z-distance < alpha^{-rep_level}.
int representative(const FillingGraph& g, int point, int rep_level);

double max_pi_at_level(const FillingGraph& g, const WeightAssignment& w, int level);

// 2 * max{pi(v) : level(v) = rep_level} / (1 - eta_plus): the geometric-series
// bound on what the two descending tails below the truncation can contribute.
// Throws EtaPlusNotBelowOne.
double boundary_tail_bound(const FillingGraph& g, const WeightAssignment& w, int rep_level);

// d_rho between the level-rep_level representatives of points x and y, with
// the tail bound attached.
RhoDistanceResult drho_boundary(const FillingGraph& g, const WeightAssignment& w, int x, int y,
                                int rep_level);

// Symmetric matrix of representative distances over a point sample.
struct DistanceMatrix {
  std::vector<int> points;
  std::vector<int> reps;  // rep vertex id per point
  int rep_level = 0;
  double tail_bound = 0;
  double eta_plus = 0;
  std::vector<double> values;  // row-major, n x n
  int n() const { return static_cast<int>(points.size()); }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * points.size() + j]; }
};

// One independent shortest-path run per distinct representative; rows are
// assembled in input order so the result is identical for any thread count.
DistanceMatrix drho_matrix(const FillingGraph& g, const WeightAssignment& w,
                           std::span<const int> points, int rep_level, int num_threads = 1);

}  // namespace hypfill
