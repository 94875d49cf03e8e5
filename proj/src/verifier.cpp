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

#include "hypfill/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "hypfill/errors.hpp"
#include "hypfill/rng.hpp"

namespace hypfill {

std::vector<int> stride_sample(int n, int cap) {
  std::vector<int> out;
  if (cap <= 0 || n <= 0) return out;
  const int stride = n <= cap ? 1 : (n + cap - 1) / cap;
  for (int i = 0; i < n; i += stride) out.push_back(i);
  return out;
}

H1Report check_h1(const FillingGraph& g, const WeightAssignment& w) {
  H1Report rep;
  rep.eta_minus = w.eta_minus;
  rep.eta_plus = w.eta_plus;
  rep.holds = w.eta_plus < 1.0;
  rep.saturated_levels = w.saturated_levels;
  std::vector<char> skip(g.depth() + 1, 0);
  for (int lev : w.saturated_levels) skip[lev] = 1;
  for (int id = 1; id < g.vertex_count(); ++id)
    if (!skip[g.level_of(id)] && w.rho[id] == w.eta_plus) {
      rep.witness_max = g.vertex_at(id);
      break;
    }
  return rep;
}

double check_h2(const FillingGraph& g, const WeightAssignment& w) {
  double k0 = 1.0;
  for (const auto& e : g.edges()) {
    const double r = w.pi[e.a] / w.pi[e.b];
    k0 = std::max({k0, r, 1.0 / r});
  }
  return k0;
}

H3Report check_h3(const FillingGraph& g, const WeightAssignment& w, const DistanceMatrix& dm) {
  H3Report rep;
  std::vector<std::vector<int>> branches(dm.n());
  for (int i = 0; i < dm.n(); ++i) branches[i] = g.tree_branch(dm.reps[i]);
  for (int i = 0; i < dm.n(); ++i)
    for (int j = i + 1; j < dm.n(); ++j) {
      if (dm.points[i] == dm.points[j]) continue;  // ratio undefined
      const int vxy = g.meet_vertex(branches[i], branches[j]);
      const double ratio = w.pi[vxy] / (dm.at(i, j) + dm.tail_bound);
      rep.ratios.push_back(ratio);
      ++rep.pairs_used;
      if (ratio > rep.k1) {
        rep.k1 = ratio;
        rep.witness = {dm.points[i], dm.points[j]};
      }
    }
  return rep;
}

std::vector<Cell> sample_cells(const FillingGraph& g, int cap, std::uint64_t seed) {
  std::vector<Cell> cells;
  for (int id = 0; id < g.vertex_count(); ++id) {
    const int m = g.level_of(id);
    if (m < 1 || m > g.depth() - 2) continue;
    cells.push_back({id, m + 2});
    if (g.depth() != m + 2) cells.push_back({id, g.depth()});
  }
  if (static_cast<int>(cells.size()) <= cap) return cells;
  Rng rng(seed);
  auto keep = rng.sample_indices(static_cast<int>(cells.size()), cap);
  std::vector<Cell> out;
  out.reserve(keep.size());
  for (int k : keep) out.push_back(cells[k]);
  return out;
}

namespace {

// log(pi(v)/pi(x,m)) per descendant; S(p) = sum exp(p * logr).
std::vector<double> descendant_log_ratios(const FillingGraph& g, const WeightAssignment& w,
                                          const Cell& c) {
  const auto desc = g.descendants(c.vertex_id, c.n);
  std::vector<double> logr;
  logr.reserve(desc.size());
  for (int v : desc) logr.push_back(std::log(w.pi[v] / w.pi[c.vertex_id]));
  return logr;
}

double power_sum(std::span<const double> logr, double p) {
  double s = 0;
  for (double lr : logr) s += std::exp(p * lr);
  return s;
}

}  // namespace

double check_h4(const FillingGraph& g, const WeightAssignment& w, double p,
                std::span<const Cell> cells) {
  if (!(p > 0)) throw Error("check_h4: p must be positive");
  double k2 = 1.0;
  for (const auto& c : cells) {
    const double s = power_sum(descendant_log_ratios(g, w, c), p);
    k2 = std::max({k2, s, 1.0 / s});
  }
  return k2;
}

PStarReport critical_exponent(const FillingGraph& g, const WeightAssignment& w,
                              std::span<const Cell> cells) {
  if (!(w.eta_plus < 1.0))
    throw EtaPlusNotBelowOne("critical_exponent requires eta_plus < 1");
  PStarReport rep;
  rep.per_cell.assign(cells.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> roots;
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    const auto logr = descendant_log_ratios(g, w, cells[ci]);
    double lo = 1e-3, hi = 64.0;
    if ((power_sum(logr, lo) - 1.0) * (power_sum(logr, hi) - 1.0) > 0) {
      ++rep.no_root;
      continue;
    }
    // S is decreasing in p (ratios < 1), so S(lo) >= 1 >= S(hi) here.
    while (hi - lo > 2e-7) {
      const double mid = 0.5 * (lo + hi);
      if (power_sum(logr, mid) > 1.0)
        lo = mid;
      else
        hi = mid;
    }
    const double root = 0.5 * (lo + hi);
    rep.per_cell[ci] = root;
    roots.push_back(root);
  }
  rep.cells_used = static_cast<int>(roots.size());
  if (!roots.empty()) {
    std::sort(roots.begin(), roots.end());
    rep.min = roots.front();
    rep.max = roots.back();
    const size_t k = roots.size();
    rep.median = k % 2 ? roots[k / 2] : 0.5 * (roots[k / 2 - 1] + roots[k / 2]);
  }
  return rep;
}

int perfectness_gap(double k2, double eta_plus, double p) {
  if (!(eta_plus < 1.0)) throw EtaPlusNotBelowOne("perfectness_gap requires eta_plus < 1");
  if (!(p > 0) || !(k2 >= 1.0)) throw Error("perfectness_gap: need p > 0 and K2 >= 1");
  const double bound = std::log(k2) / (p * std::log(1.0 / eta_plus));
  return static_cast<int>(std::floor(bound)) + 1;
}

double delta_hyperbolicity(const FillingGraph& g, int cap, std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<int> sample;
  if (n <= cap) {
    sample.resize(n);
    for (int i = 0; i < n; ++i) sample[i] = i;
  } else {
    Rng rng(seed);
    sample = rng.sample_indices(n, cap);
  }
  const int k = static_cast<int>(sample.size());
  // Hop distances from each sampled vertex by BFS.
  std::vector<std::vector<int>> hop(k, std::vector<int>(n, -1));
  for (int s = 0; s < k; ++s) {
    auto& dist = hop[s];
    std::deque<int> q{sample[s]};
    dist[sample[s]] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
    }
  }
  auto d = [&](int a, int b) { return hop[a][sample[b]]; };
  int defect = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int e = c + 1; e < k; ++e) {
          int s1 = d(a, b) + d(c, e);
          int s2 = d(a, c) + d(b, e);
          int s3 = d(a, e) + d(b, c);
          int m1 = std::max({s1, s2, s3});
          int m3 = std::min({s1, s2, s3});
          int m2 = s1 + s2 + s3 - m1 - m3;
          defect = std::max(defect, m1 - m2);
        }
  return defect / 2.0;
}

ConditionReport verify_conditions(const FillingGraph& g, const WeightAssignment& w,
                                  const VerifierOptions& opt) {
  ConditionReport rep;
  rep.h1 = check_h1(g, w);
  rep.k0 = check_h2(g, w);

  const int rep_level = opt.rep_level < 0 ? g.depth() : opt.rep_level;
  const auto pts = stride_sample(g.space().size(), opt.sample_points);
  if (rep.h1.holds) {
    const auto dm = drho_matrix(g, w, pts, rep_level, opt.num_threads);
    rep.h3 = check_h3(g, w, dm);
  }

  const auto cells = sample_cells(g, opt.cell_cap, opt.seed);
  if (rep.h1.holds) rep.p_star = critical_exponent(g, w, cells);

  rep.analysis_p = opt.analysis_p > 0 ? opt.analysis_p
                   : rep.p_star.cells_used > 0 ? rep.p_star.median
                                               : 1.0;
  rep.k2_at_p = check_h4(g, w, rep.analysis_p, cells);
  for (const double dp : {-0.25, 0.0, 0.25}) {
    const double p = rep.analysis_p + dp;
    if (p > 0) rep.k2_grid.emplace_back(p, dp == 0.0 ? rep.k2_at_p : check_h4(g, w, p, cells));
  }
  if (rep.h1.holds) rep.n_gap = perfectness_gap(rep.k2_at_p, w.eta_plus, rep.analysis_p);
  rep.delta = delta_hyperbolicity(g, opt.delta_cap, opt.seed);
  return rep;
}

}  // namespace hypfill
