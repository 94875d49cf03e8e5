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

#include "hypfill/metric_space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hypfill/errors.hpp"

namespace hypfill {

namespace {

std::string triple_msg(const char* what, int i, int k, int j, double lhs, double rhs) {
  std::ostringstream os;
  os << what << " (" << i << "," << k << "," << j << "): " << lhs << " > " << rhs;
  return os.str();
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& values,
                                                 std::string label,
                                                 std::optional<double> normalize_to) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw Error("from_matrix: need at least 2 points");
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != n) throw Error("from_matrix: matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (values[i][i] != 0.0) {
      std::ostringstream os;
      os << "nonzero diagonal at (" << i << "," << i << "): " << values[i][i];
      throw MetricViolation(os.str(), i, i, i);
    }
    for (int j = i + 1; j < n; ++j) {
      if (values[i][j] != values[j][i]) {
        std::ostringstream os;
        os << "asymmetry at (" << i << "," << j << "): " << values[i][j] << " vs " << values[j][i];
        throw MetricViolation(os.str(), i, j, j);
      }
      if (!(values[i][j] > 0.0) || !std::isfinite(values[i][j])) {
        std::ostringstream os;
        os << "non-positive distance at (" << i << "," << j << "): " << values[i][j];
        throw MetricViolation(os.str(), i, j, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (values[i][j] > values[i][k] + values[k][j]) {
          throw MetricViolation(
              triple_msg("triangle inequality violated at", i, k, j, values[i][j],
                         values[i][k] + values[k][j]),
              i, k, j);
        }
      }
    }
  }

  std::vector<double> flat(static_cast<size_t>(n) * n);
  double diam = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      flat[static_cast<size_t>(i) * n + j] = values[i][j];
      diam = std::max(diam, values[i][j]);
    }

  if (normalize_to.has_value()) {
    const double target = *normalize_to;
    if (!(target > 0.0) || !(target < 1.0)) throw Error("normalize target must lie in (0,1)");
    if (diam <= 0.0) throw DegenerateSpace("all distances are zero");
    const double scale = target / diam;
    diam = 0;
    for (auto& v : flat) {
      v *= scale;
      diam = std::max(diam, v);
    }
  }
  if (!(diam > 0.0) || !(diam < 1.0)) {
    std::ostringstream os;
    os << "diameter " << diam << " outside (0,1); pass a normalization target to rescale";
    throw DiameterOutOfRange(os.str());
  }

  double res = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) res = std::min(res, flat[static_cast<size_t>(i) * n + j]);

  return FiniteMetricSpace(n, std::move(flat), diam, res, std::move(label));
}

FiniteMetricSpace normalize_diameter(const FiniteMetricSpace& space, double target) {
  if (!(target > 0.0) || !(target < 1.0)) throw Error("normalize target must lie in (0,1)");
  if (space.diameter() <= 0.0) throw DegenerateSpace("all distances are zero");
  const int n = space.size();
  const double scale = target / space.diameter();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = space.dist(i, j) * scale;
  return FiniteMetricSpace::from_matrix(m, space.label());
}

FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon <= 1.0)) throw Error("snowflake exponent must lie in (0,1]");
  const int n = space.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = std::pow(space.dist(i, j), epsilon);
  return FiniteMetricSpace::from_matrix(m, space.label() + "^" + std::to_string(epsilon));
}

PerfectnessReport estimate_uniform_perfectness(const FiniteMetricSpace& space,
                                               int radius_grid_size) {
  const int n = space.size();
  PerfectnessReport rep;
  rep.resolution_cutoff = space.resolution();
  const double hi = space.diameter() / 2;
  const double lo = space.resolution() * 1.05;
  if (!(lo < hi) || radius_grid_size < 2) {
    // No scale between resolution and diam/2: nothing to certify.
    rep.exempt_annuli = n * std::max(radius_grid_size, 0);
    for (int z = 0; z < n && static_cast<int>(rep.empty_witnesses.size()) < 32; ++z)
      rep.empty_witnesses.emplace_back(z, hi);
    return rep;
  }
  double required = 1.0;
  bool degenerate = false;
  bool any_informative = false;
  for (int z = 0; z < n; ++z) {
    bool all_empty = true;
    for (int k = 0; k < radius_grid_size; ++k) {
      const double r = hi * std::pow(lo / hi, static_cast<double>(k) / (radius_grid_size - 1));
      // Widest annulus available at (z, r): needs the farthest point below r.
      double dstar = 0;
      for (int w = 0; w < n; ++w) {
        const double d = space.dist(z, w);
        if (d > 0.0 && d < r) dstar = std::max(dstar, d);
      }
      if (dstar == 0.0) {
        ++rep.exempt_annuli;
        if (static_cast<int>(rep.empty_witnesses.size()) < 32)
          rep.empty_witnesses.emplace_back(z, r);
        continue;
      }
      all_empty = false;
      any_informative = true;
      required = std::max(required, r / dstar);
    }
    degenerate = degenerate || all_empty;
  }
  if (!degenerate && any_informative) rep.c_u = required;
  return rep;
}

int estimate_doubling(const FiniteMetricSpace& space) {
  const int n = space.size();
  int best = 0;
  std::vector<int> packed;
  for (int z = 0; z < n; ++z) {
    for (double r = space.resolution(); r <= 2 * space.diameter(); r *= 1.5) {
      packed.clear();
      for (int i = 0; i < n; ++i) {
        if (!(space.dist(z, i) < r)) continue;
        bool ok = true;
        for (int j : packed) {
          if (space.dist(i, j) < r / 2) {
            ok = false;
            break;
          }
        }
        if (ok) packed.push_back(i);
      }
      best = std::max(best, static_cast<int>(packed.size()));
    }
  }
  return best;
}

}  // namespace hypfill
