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

#include <functional>
#include <string>
#include <vector>

#include "hypfill/filling.hpp"

namespace hypfill {

enum class WeightKind { constant, measure, custom };

// Per-vertex weight rho and its multiplicative accumulation pi along the
// spanning tree: pi(root) = rho(root), pi(v) = rho(v) * pi(parent(v)).
// eta bounds are observed over non-root vertices, excluding saturated levels
// (levels where some ball B(x, tau*alpha^{-n}) already covers the whole
// space; a finite-truncation artifact of large tau).
struct WeightAssignment {
  WeightKind kind = WeightKind::custom;
  std::vector<double> rho;  // by vertex id
  std::vector<double> pi;   // by vertex id
  double eta_minus = 0;
  double eta_plus = 0;
  std::vector<int> saturated_levels;
};

// rho == c everywhere, c in (0,1); pi(v) = c^{level+1}.
WeightAssignment constant_rho(const FillingGraph& g, double c);

// Open-ball measure oracle. mass(x, r) is the measure of B_dZ(x, r); p is the
// Ahlfors regularity exponent of the underlying theta-metric measure.
struct MeasureOracle {
  std::function<double(int, double)> mass;
  double total = 1;
  double p = 1;
};

// Uniform point masses 1/n.
MeasureOracle counting_oracle(const FiniteMetricSpace& space, double p);
// Supplied point masses (need not be normalized).
MeasureOracle discrete_oracle(const FiniteMetricSpace& space, std::vector<double> masses,
                              double p);

// The measure-derived weights: rho(w0) = mu(Z)^{1/p} (=1 after the internal
// normalization to total mass 1) and
//   rho((x,n)) = ( mu(B(x, tau a^-n)) / mu(B(z, tau a^{1-n})) )^{1/p}
// with z the tree parent of (x,n). Telescoping makes
// pi((x,n)) = mu(B(x, tau a^-n))^{1/p}, which is recomputed and asserted to
// 1e-9 at every vertex. Throws ZeroMass when a required ball has no mass.
WeightAssignment measure_rho(const FillingGraph& g, const MeasureOracle& oracle);

// Arbitrary positive weights, one per vertex id. No (H1) guarantee; the
// verifier reports violations. Throws MissingVertex / NonPositiveWeight.
WeightAssignment custom_rho(const FillingGraph& g, const std::vector<double>& values);

// omega := pi.
std::vector<double> omega_from_pi(const WeightAssignment& w);

// rho(w0) := omega(w0), rho(v) := omega(v)/omega(parent(v)); pi rebuilt
// canonically. Round-trips with omega_from_pi up to IEEE rounding (exactly
// for dyadic weights).
WeightAssignment rho_from_omega(const FillingGraph& g, const std::vector<double>& omega);

// Exact integral of the linear interpolation of pi over the unit edge [u,v]:
// (pi(u)+pi(v))/2. Throws NotAnEdge.
double edge_integral(const FillingGraph& g, const WeightAssignment& w, int u, int v);

}  // namespace hypfill
