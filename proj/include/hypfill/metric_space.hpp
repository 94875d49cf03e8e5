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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypfill {

// A finite metric space on points 0..n-1. Validated at construction:
// zero diagonal, symmetry, positive off-diagonal entries, every triangle
// inequality (exhaustive O(n^3)), and 0 < diameter < 1. Immutable afterwards;
// all comparisons downstream use the stored doubles with strict inequalities,
// so results are deterministic for a given input.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  // Throws MetricViolation / DiameterOutOfRange / DegenerateSpace.
  // If normalize_to is set, all distances are rescaled so the diameter equals
  // *normalize_to before the (0,1) range check.
  static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& values,
                                       std::string label,
                                       std::optional<double> normalize_to = std::nullopt);

  int size() const { return n_; }
  double dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
  double diameter() const { return diam_; }
  // Smallest positive pairwise distance.
  double resolution() const { return res_; }
  const std::string& label() const { return label_; }

 private:
  FiniteMetricSpace(int n, std::vector<double> d, double diam, double res, std::string label)
      : n_(n), d_(std::move(d)), diam_(diam), res_(res), label_(std::move(label)) {}

  int n_ = 0;
  std::vector<double> d_;
  double diam_ = 0;
  double res_ = 0;
  std::string label_;
};

// Rescales so diameter == target (within floating tolerance). target in (0,1).
FiniteMetricSpace normalize_diameter(const FiniteMetricSpace& space, double target);

// dist' = dist^epsilon, epsilon in (0,1]. Concavity of t^eps preserves the
// triangle inequality; diameter^eps stays below 1.
FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double epsilon);

struct PerfectnessReport {
  // Smallest constant making every sampled annulus B(z,r) \ B(z,r/C_U)
  // non-empty; unset when some point has empty annuli at every sampled scale.
  std::optional<double> c_u;
  // Radii below this are exempt: a finite space has no points there.
  double resolution_cutoff = 0;
  // Sampled scales whose punctured ball B(z,r) \ {z} was empty.
  int exempt_annuli = 0;
  // (center, radius) witnesses for empty annuli, capped.
  std::vector<std::pair<int, double>> empty_witnesses;
  bool degenerate() const { return !c_u.has_value(); }
};

PerfectnessReport estimate_uniform_perfectness(const FiniteMetricSpace& space,
                                               int radius_grid_size = 32);

// Max size over sampled (center, radius) of a greedily packed r/2-separated
// subset of B(center, r).
int estimate_doubling(const FiniteMetricSpace& space);

}  // namespace hypfill
