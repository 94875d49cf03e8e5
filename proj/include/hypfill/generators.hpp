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
#include <vector>

#include "hypfill/metric_space.hpp"

namespace hypfill {

// A canonical test space with its natural measure and (when known) the
// exact similarity dimension, used as ground truth by the acceptance suite.
struct GeneratedSpace {
  FiniteMetricSpace space;
  std::vector<double> natural_measure;  // point masses, sum 1
  std::optional<double> known_dimension;
  double resolution = 0;  // smallest positive inter-point distance
};

// Left endpoints of the level-`level` middle-thirds construction on [0,1].
// 2^level points, uniform masses, dimension log2/log3. level in [1,12].
GeneratedSpace make_cantor(int level);

// n equally spaced points with the arc-length metric rescaled to diameter
// 0.9, uniform masses, dimension 1. n in [3,4096].
GeneratedSpace make_circle(int n);

// Vertex set of the level-`level` Sierpinski gasket prefractal, Euclidean
// metric normalized to diameter 0.9, uniform masses, dimension log3/log2.
// level in [1,7]; the point count is 3(3^level+1)/2.
GeneratedSpace make_sierpinski(int level);

}  // namespace hypfill
