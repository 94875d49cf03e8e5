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

#include "hypfill/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hypfill/errors.hpp"

namespace hypfill {

namespace {

GeneratedSpace finish(FiniteMetricSpace space, std::vector<double> masses, double dim) {
  GeneratedSpace g;
  g.resolution = space.resolution();
  g.space = std::move(space);
  g.natural_measure = std::move(masses);
  g.known_dimension = dim;
  return g;
}

}  // namespace

GeneratedSpace make_cantor(int level) {
  if (level < 1) throw Error("make_cantor: level must be >= 1");
  if (level > 12) throw SizeLimit("make_cantor: level capped at 12");
  const int n = 1 << level;
  // Enumerating digit vectors MSB-first yields ascending coordinates.
  std::vector<double> pts(n);
  for (int i = 0; i < n; ++i) {
    double x = 0;
    for (int k = 1; k <= level; ++k)
      if (i >> (level - k) & 1) x += 2.0 * std::pow(3.0, -k);
    pts[i] = x;
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = std::abs(pts[i] - pts[j]);
  auto space = FiniteMetricSpace::from_matrix(m, "cantor-" + std::to_string(level));
  return finish(std::move(space), std::vector<double>(n, 1.0 / n), std::log(2.0) / std::log(3.0));
}

GeneratedSpace make_circle(int n) {
  if (n < 3) throw Error("make_circle: need n >= 3");
  if (n > 4096) throw SizeLimit("make_circle: n capped at 4096");
  const int kmax = n / 2;
  const double step = 0.9 / kmax;  // arc length between neighbors after rescale
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int k = std::min(std::abs(i - j), n - std::abs(i - j));
      m[i][j] = k * step;
    }
  auto space = FiniteMetricSpace::from_matrix(m, "circle-" + std::to_string(n));
  return finish(std::move(space), std::vector<double>(n, 1.0 / n), 1.0);
}

GeneratedSpace make_sierpinski(int level) {
  if (level < 1) throw Error("make_sierpinski: level must be >= 1");
  if (level > 7) throw SizeLimit("make_sierpinski: level capped at 7");
  // Subdivide on an integer lattice; a corner (a,b) maps to the plane point
  // (a + b/2, b*sqrt(3)/2).
  struct Tri {
    int a, b, s;
  };
  std::vector<Tri> tris{{0, 0, 1 << level}};
  for (int k = 0; k < level; ++k) {
    std::vector<Tri> next;
    next.reserve(tris.size() * 3);
    for (const auto& t : tris) {
      const int h = t.s / 2;
      next.push_back({t.a, t.b, h});
      next.push_back({t.a + h, t.b, h});
      next.push_back({t.a, t.b + h, h});
    }
    tris = std::move(next);
  }
  std::set<std::pair<int, int>> corners;  // (b, a): row-major bottom-up ordering
  for (const auto& t : tris) {
    corners.insert({t.b, t.a});
    corners.insert({t.b, t.a + t.s});
    corners.insert({t.b + t.s, t.a});
  }
  const int n = static_cast<int>(corners.size());
  std::vector<double> xs(n), ys(n);
  int idx = 0;
  const double root3half = std::sqrt(3.0) / 2.0;
  for (const auto& [b, a] : corners) {
    xs[idx] = a + b / 2.0;
    ys[idx] = b * root3half;
    ++idx;
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
  auto space =
      FiniteMetricSpace::from_matrix(m, "sierpinski-" + std::to_string(level), 0.9);
  return finish(std::move(space), std::vector<double>(n, 1.0 / n), std::log(3.0) / std::log(2.0));
}

}  // namespace hypfill
