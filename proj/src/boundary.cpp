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

#include "hypfill/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hypfill/errors.hpp"
#include "hypfill/rng.hpp"

namespace hypfill {

BoundarySample build_boundary_sample(const FillingGraph& g, const WeightAssignment& w,
                                     std::span<const int> points, int rep_level,
                                     int num_threads) {
  BoundarySample bs;
  bs.points.assign(points.begin(), points.end());
  bs.rep_level = rep_level;
  bs.dmatrix = drho_matrix(g, w, points, rep_level, num_threads);
  bs.reps = bs.dmatrix.reps;
  bs.j0 = g.regime().j0();
  return bs;
}

int scale_index(double alpha, double d) {
  if (!(d > 0)) throw Error("scale_index: distance must be positive");
  int n = static_cast<int>(std::floor(std::log(1.0 / d) / std::log(alpha))) + 1;
  while (!(std::pow(alpha, -n) < d)) ++n;
  while (!(d <= std::pow(alpha, 1 - n))) --n;
  return n;
}

BiHolderReport check_biholder(const BoundarySample& bs, const FillingGraph& g,
                              double eta_minus, double eta_plus) {
  if (!(eta_minus > 0) || !(eta_plus < 1) || eta_minus > eta_plus)
    throw Error("check_biholder: eta bounds must satisfy 0 < eta- <= eta+ < 1");
  BiHolderReport rep;
  const double log_inv_alpha = std::log(1.0 / g.alpha());
  rep.tau_minus = std::log(eta_minus) / log_inv_alpha;
  rep.tau_plus = std::log(eta_plus) / log_inv_alpha;
  rep.c_fit = std::numeric_limits<double>::infinity();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < bs.dmatrix.n(); ++i)
    for (int j = i + 1; j < bs.dmatrix.n(); ++j) {
      const double dz = g.space().dist(bs.points[i], bs.points[j]);
      const double dr = bs.dmatrix.at(i, j);
      if (!(dz > 0) || !(dr > 0)) {
        ++rep.skipped;
        continue;
      }
      rep.c_fit = std::min(rep.c_fit, dr / std::pow(dz, rep.tau_minus));
      rep.C_fit = std::max(rep.C_fit, dr / std::pow(dz, rep.tau_plus));
      const double x = std::log(dz), y = std::log(dr);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++rep.pairs_used;
    }
  if (rep.pairs_used >= 2) {
    const double n = rep.pairs_used;
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

MeetReport check_meet_comparability(const BoundarySample& bs, const FillingGraph& g,
                                    const WeightAssignment& w) {
  MeetReport rep;
  rep.upper_bound = 2.0 / (1.0 - w.eta_plus);
  rep.lower = std::numeric_limits<double>::infinity();
  rep.upper_ok = true;
  std::vector<std::vector<int>> branches(bs.dmatrix.n());
  for (int i = 0; i < bs.dmatrix.n(); ++i) branches[i] = g.tree_branch(bs.reps[i]);
  const double tail = bs.dmatrix.tail_bound;
  for (int i = 0; i < bs.dmatrix.n(); ++i)
    for (int j = i + 1; j < bs.dmatrix.n(); ++j) {
      if (bs.points[i] == bs.points[j]) continue;
      const double dr = bs.dmatrix.at(i, j);
      if (!(dr > 0)) {
        ++rep.skipped;
        continue;
      }
      const int vxy = g.meet_vertex(branches[i], branches[j]);
      const double pi_xy = w.pi[vxy];
      const double ratio = dr / pi_xy;
      rep.lower = std::min(rep.lower, ratio);
      rep.upper = std::max(rep.upper, ratio);
      rep.k1_consistency = std::max(rep.k1_consistency, pi_xy / (dr + tail));
      rep.upper_ok = rep.upper_ok && dr <= rep.upper_bound * pi_xy + tail;
      ++rep.pairs_used;
    }
  return rep;
}

QsReport qs_envelope(const BoundarySample& bs, const FillingGraph& g, double eta_minus,
                     double eta_plus, int triple_count, std::uint64_t seed) {
  QsReport rep;
  const double log_inv_alpha = std::log(1.0 / g.alpha());
  rep.tau_minus = std::log(eta_minus) / log_inv_alpha;
  rep.tau_plus = std::log(eta_plus) / log_inv_alpha;
  rep.theta = std::min({rep.tau_plus, 1.0 / rep.tau_minus, 1.0});
  const int k = bs.dmatrix.n();
  if (k < 3) return rep;
  Rng rng(seed);
  auto eval = [&](int a, int b, int c) {
    const double dz_ab = g.space().dist(bs.points[a], bs.points[b]);
    const double dz_ac = g.space().dist(bs.points[a], bs.points[c]);
    const double dr_ab = bs.dmatrix.at(a, b);
    const double dr_ac = bs.dmatrix.at(a, c);
    if (!(dz_ac > 0) || !(dr_ac > 0) || !(dz_ab > 0) || !(dr_ab > 0)) {
      ++rep.degenerate;
      return;
    }
    const double t = dz_ab / dz_ac;
    const double s = dr_ab / dr_ac;
    const double env = std::max(std::pow(t, rep.tau_plus), std::pow(t, rep.tau_minus));
    const double env_pow = std::max(std::pow(t, rep.theta), std::pow(t, 1.0 / rep.theta));
    rep.C_fit = std::max(rep.C_fit, s / env);
    rep.C_power = std::max(rep.C_power, s / env_pow);
    ++rep.triples_used;
  };
  const long long total = static_cast<long long>(k) * (k - 1) * (k - 2);
  if (total <= triple_count) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (a != b && a != c && b != c) eval(a, b, c);
  } else {
    for (int t = 0; t < triple_count; ++t) {
      const int a = static_cast<int>(rng.below(k));
      const int b = static_cast<int>(rng.below(k));
      const int c = static_cast<int>(rng.below(k));
      if (a == b || a == c || b == c) {
        ++rep.degenerate;
        continue;
      }
      eval(a, b, c);
    }
  }
  return rep;
}

BoundaryMeasure build_mu_n(const FillingGraph& g, const WeightAssignment& w, int n, double p) {
  if (n < 0 || n > g.depth()) throw DepthExceeded("build_mu_n: level beyond truncation");
  if (!(p > 0)) throw Error("build_mu_n: p must be positive");
  BoundaryMeasure mu;
  mu.level = n;
  mu.p = p;
  const auto [lo, hi] = g.level_range(n);
  for (int id = lo; id < hi; ++id) {
    mu.point_ids.push_back(g.point_of(id));
    mu.masses.push_back(std::pow(w.pi[id], p));
    mu.total += mu.masses.back();
  }
  return mu;
}

std::vector<double> dyadic_radii(double r_max, double floor_r, int max_steps) {
  std::vector<double> out;
  for (int k = 0; k < max_steps; ++k) {
    const double r = r_max / std::pow(2.0, k);
    if (r < floor_r) break;
    out.push_back(r);
  }
  return out;
}

AhlforsReport check_ahlfors(const BoundarySample& bs, const FillingGraph& g,
                            const BoundaryMeasure& mu, std::span<const int> centers,
                            std::span<const double> radii, BallMetric metric) {
  AhlforsReport rep;
  // Position of each mu point in the sample (rho mode measures distances
  // between representatives through the dmatrix).
  std::map<int, int> sample_pos;
  for (int i = 0; i < bs.dmatrix.n(); ++i) sample_pos.emplace(bs.points[i], i);
  if (metric == BallMetric::rho) {
    for (int pt : mu.point_ids)
      if (!sample_pos.count(pt))
        throw Error("check_ahlfors: rho mode needs every mu point in the boundary sample");
  }

  double lo_ratio = std::numeric_limits<double>::infinity(), hi_ratio = 0;
  std::vector<double> slopes;
  for (int c : centers) {
    std::vector<std::pair<double, double>> seq;  // (log r, log ratio)
    for (double r : radii) {
      double mass = 0;
      for (size_t m = 0; m < mu.point_ids.size(); ++m) {
        double d;
        if (metric == BallMetric::dz) {
          d = g.space().dist(c, mu.point_ids[m]);
        } else {
          d = bs.dmatrix.at(sample_pos.at(c), sample_pos.at(mu.point_ids[m]));
        }
        if (d < r) mass += mu.masses[m];
      }
      if (!(mass > 0)) {
        ++rep.excluded_radii;
        continue;
      }
      const double ratio = mass / std::pow(r, mu.p);
      rep.table.push_back({c, r, ratio});
      seq.emplace_back(std::log(r), std::log(ratio));
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
    }
    if (seq.size() >= 3) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (auto [x, y] : seq) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double n = static_cast<double>(seq.size());
      slopes.push_back((n * sxy - sx * sy) / (n * sxx - sx * sx));
    }
  }
  if (hi_ratio > 0) rep.c_reg = hi_ratio / lo_ratio;
  if (!radii.empty()) rep.span = radii.front() / radii.back();
  if (!slopes.empty()) {
    std::sort(slopes.begin(), slopes.end());
    const size_t k = slopes.size();
    rep.trend_slope = k % 2 ? slopes[k / 2] : 0.5 * (slopes[k / 2 - 1] + slopes[k / 2]);
    rep.monotone_trend = std::abs(rep.trend_slope) >= 0.2;
  }
  return rep;
}

DiamReport check_diam_comparison(const FillingGraph& g, const WeightAssignment& w,
                                 const BoundarySample& bs, std::span<const int> vertex_ids) {
  DiamReport rep;
  rep.lower = std::numeric_limits<double>::infinity();
  std::map<int, int> sample_pos;
  for (int i = 0; i < bs.dmatrix.n(); ++i) sample_pos.emplace(bs.points[i], i);
  for (int id : vertex_ids) {
    const Vertex v = g.vertex_at(id);
    const double r = std::pow(g.alpha(), -v.level);
    std::vector<int> members;
    for (int z = 0; z < g.space().size(); ++z)
      if (g.space().dist(v.point, z) < r && sample_pos.count(z))
        members.push_back(sample_pos.at(z));
    double diam = 0;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        diam = std::max(diam, bs.dmatrix.at(members[i], members[j]));
    if (!(diam > 0)) {
      ++rep.skipped;
      continue;
    }
    const double ratio = diam / w.pi[id];
    rep.lower = std::min(rep.lower, ratio);
    rep.upper = std::max(rep.upper, ratio);
    ++rep.cells_used;
  }
  return rep;
}

ScaleIndexReport check_scale_index(const BoundarySample& bs, const FillingGraph& g) {
  ScaleIndexReport rep;
  const int aj0 = std::abs(bs.j0);
  std::vector<std::vector<int>> branches(bs.dmatrix.n());
  for (int i = 0; i < bs.dmatrix.n(); ++i) branches[i] = g.tree_branch(bs.reps[i]);
  for (int i = 0; i < bs.dmatrix.n(); ++i)
    for (int j = i + 1; j < bs.dmatrix.n(); ++j) {
      const double dz = g.space().dist(bs.points[i], bs.points[j]);
      if (!(dz > 0)) continue;
      const int nxy = scale_index(g.alpha(), dz);
      const int lo = nxy - aj0 - 1;
      const int hi = nxy + aj0 + 3;
      if (lo > bs.rep_level) {
        ++rep.exempt;  // sandwich lives below the truncation
        continue;
      }
      const int lvl = g.level_of(g.meet_vertex(branches[i], branches[j]));
      ++rep.checked;
      if (lvl < lo || lvl > hi) ++rep.violations;
    }
  return rep;
}

}  // namespace hypfill
