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

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypfill/rho_metric.hpp"

namespace hypfill {

struct H1Report {
  double eta_minus = 0, eta_plus = 0;
  bool holds = false;  // eta_plus < 1
  std::vector<int> saturated_levels;
  Vertex witness_max;  // vertex realizing eta_plus
};

H1Report check_h1(const FillingGraph& g, const WeightAssignment& w);

// K0 = max over edges (u,v) of max(pi(u)/pi(v), pi(v)/pi(u)).
double check_h2(const FillingGraph& g, const WeightAssignment& w);

struct H3Report {
  double k1 = 0;
  std::array<int, 2> witness{-1, -1};  // point ids
  int pairs_used = 0;
  std::vector<double> ratios;  // pi(v_xy) / (d_rho + tail), per used pair
};

// K1 over all distinct pairs of the matrix sample: the meet vertex comes from
// the canonical tree branches of the representatives, the distance from the
// matrix, with the tail bound added so the truncation cannot inflate K1.
H3Report check_h3(const FillingGraph& g, const WeightAssignment& w, const DistanceMatrix& dm);

// A sampling cell (x,m) with target level n for the descendant sums of (H4).
struct Cell {
  int vertex_id = 0;
  int n = 0;
};

// All vertices at levels m in {1..depth-2} paired with n in {m+2, depth},
// uniformly subsampled to `cap` with the given seed when larger.
std::vector<Cell> sample_cells(const FillingGraph& g, int cap, std::uint64_t seed);

// K2(p) = max over cells of max(S, 1/S), S = sum over D_n(x,m) of
// (pi(v)/pi((x,m)))^p.
double check_h4(const FillingGraph& g, const WeightAssignment& w, double p,
                std::span<const Cell> cells);

struct PStarReport {
  double median = 0, min = 0, max = 0;
  int no_root = 0;
  int cells_used = 0;
  std::vector<double> per_cell;  // aligned with the input cells; NaN = no root
};

// Per cell, the root of S(p) = 1 by bisection on [1e-3, 64] to 1e-6; reports
// the median and spread across cells with a root.
PStarReport critical_exponent(const FillingGraph& g, const WeightAssignment& w,
                              std::span<const Cell> cells);

// Smallest integer N with N > (1/p) log(K2) / log(1/eta_plus).
int perfectness_gap(double k2, double eta_plus, double p);

// Four-point condition over the graph metric (unit-length edges): half the
// max defect between the two largest pair-sums. Exhaustive over all vertices
// when vertex_count <= cap, else over a seeded sample of cap vertices.
double delta_hyperbolicity(const FillingGraph& g, int cap = 96, std::uint64_t seed = 1729);

struct VerifierOptions {
  int rep_level = -1;  // -1: truncation depth
  int sample_points = 32;
  int cell_cap = 2000;
  int delta_cap = 96;
  std::uint64_t seed = 1729;
  double analysis_p = 0;  // 0: use the p* median
  int num_threads = 1;
};

struct ConditionReport {
  H1Report h1;
  double k0 = 1;
  H3Report h3;
  std::vector<std::pair<double, double>> k2_grid;  // (p, K2(p))
  double analysis_p = 0;
  double k2_at_p = 1;
  PStarReport p_star;
  double delta = 0;
  int n_gap = 1;
};

// Runs every condition check with deterministic sampling. Boundary-dependent
// pieces (K1) use a stride sample of the space points.
ConditionReport verify_conditions(const FillingGraph& g, const WeightAssignment& w,
                                  const VerifierOptions& opt);

// Deterministic stride subsample of 0..n-1 (all points when n <= cap).
std::vector<int> stride_sample(int n, int cap);

}  // namespace hypfill
