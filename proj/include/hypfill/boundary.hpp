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
#include <vector>

#include "hypfill/verifier.hpp"

namespace hypfill {

// The boundary map at finite depth: each sample point is represented by its
// nearest level-rep_level net vertex, pairwise distances by the d_rho matrix.
struct BoundarySample {
  std::vector<int> points;
  int rep_level = 0;
  std::vector<int> reps;  // vertex ids, aligned with points
  DistanceMatrix dmatrix;
  int j0 = 0;
};

BoundarySample build_boundary_sample(const FillingGraph& g, const WeightAssignment& w,
                                     std::span<const int> points, int rep_level,
                                     int num_threads = 1);

// The integer n with alpha^{-n} < d <= alpha^{1-n}.
int scale_index(double alpha, double d);

struct BiHolderReport {
  double tau_minus = 0, tau_plus = 0;  // log(eta_-+)/log(1/alpha)
  double c_fit = 0;   // min over pairs of d_rho / d_Z^{tau_minus}
  double C_fit = 0;   // max over pairs of d_rho / d_Z^{tau_plus}
  double slope = 0;   // least-squares slope of log d_rho vs log d_Z
  int pairs_used = 0;
  int skipped = 0;    // pairs with zero representative distance
};

BiHolderReport check_biholder(const BoundarySample& bs, const FillingGraph& g,
                              double eta_minus, double eta_plus);

struct MeetReport {
  double lower = 0, upper = 0;  // band of d_rho / pi(v_xy)
  double upper_bound = 0;       // 2 / (1 - eta_plus)
  bool upper_ok = false;        // d_rho <= bound * pi(v_xy) + tail everywhere
  double k1_consistency = 0;    // max pi(v_xy) / (d_rho + tail), cf. check_h3
  int pairs_used = 0;
  int skipped = 0;
};

MeetReport check_meet_comparability(const BoundarySample& bs, const FillingGraph& g,
                                    const WeightAssignment& w);

struct QsReport {
  double tau_minus = 0, tau_plus = 0;
  double C_fit = 0;    // smallest C with s <= C max{t^tau+, t^tau-} on the sample
  double theta = 1;    // power-quasisymmetry exponent min(tau_plus, 1/tau_minus)
  double C_power = 0;  // envelope constant for eta(t) = C max{t^theta, t^{1/theta}}
  int triples_used = 0;
  int degenerate = 0;
};

// Distortion envelope over seeded distinct triples of sample indices.
QsReport qs_envelope(const BoundarySample& bs, const FillingGraph& g, double eta_minus,
                     double eta_plus, int triple_count, std::uint64_t seed);

// mu_n: mass pi((x,n))^p on each level-n vertex.
struct BoundaryMeasure {
  int level = 0;
  double p = 1;
  std::vector<int> point_ids;   // A_n members, net order
  std::vector<double> masses;   // aligned
  double total = 0;
};

BoundaryMeasure build_mu_n(const FillingGraph& g, const WeightAssignment& w, int n, double p);

enum class BallMetric { rho, dz };

struct AhlforsRow {
  int center = 0;
  double radius = 0;
  double ratio = 0;  // mu(ball)/r^p
};

struct AhlforsReport {
  double c_reg = 0;        // max ratio / min ratio over the table
  double trend_slope = 0;  // median per-center slope of log ratio vs log r
  bool monotone_trend = false;  // |trend_slope| >= 0.2: regularity failure flag
  int excluded_radii = 0;
  double span = 0;  // largest included radius / smallest
  std::vector<AhlforsRow> table;
};

// Ratios mu(B(center, r))/r^p over centers and dyadic radii. Balls live in
// d_rho via the representative embedding, or in d_Z (quasi-ball mode).
// Radii below the floor (resolution / tail induced) are excluded and counted.
AhlforsReport check_ahlfors(const BoundarySample& bs, const FillingGraph& g,
                            const BoundaryMeasure& mu, std::span<const int> centers,
                            std::span<const double> radii, BallMetric metric);

// Dyadic radii descending from r_max while >= floor.
std::vector<double> dyadic_radii(double r_max, double floor_r, int max_steps = 10);

struct DiamReport {
  double lower = 0, upper = 0;  // band of diam_rho(ball reps) / pi((x,n))
  int cells_used = 0;
  int skipped = 0;  // balls holding fewer than two sample points
};

// Lemma-style comparison: d_rho-diameter of the representatives of
// B_dZ(x, alpha^{-n}) against pi((x,n)), over sampled vertices.
DiamReport check_diam_comparison(const FillingGraph& g, const WeightAssignment& w,
                                 const BoundarySample& bs, std::span<const int> vertex_ids);

struct ScaleIndexReport {
  int checked = 0;
  int violations = 0;
  int exempt = 0;  // pairs whose sandwich exceeds the truncation depth
};

// Per pair: level(v_xy) must lie in [n_xy - |j0| - 1, n_xy + |j0| + 3].
ScaleIndexReport check_scale_index(const BoundarySample& bs, const FillingGraph& g);

}  // namespace hypfill
